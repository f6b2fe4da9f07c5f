#include "signrank/linalg.hpp"

#include <string>

namespace signrank {

namespace {

// Height of block row r / width of block column c, from whichever cells fix it.
std::optional<std::size_t> block_extent(const BlockGrid& grid, std::size_t index, bool by_row) {
  std::optional<std::size_t> extent;
  for (std::size_t k = 0; k < 2; ++k) {
    const Block& b = by_row ? grid[index][k] : grid[k][index];
    std::optional<std::size_t> here;
    if (b.kind() == Block::Kind::Dense) here = by_row ? b.dense().rows() : b.dense().cols();
    if (b.kind() == Block::Kind::Identity) here = b.identity_size();
    if (!here) continue;
    if (extent && *extent != *here) {
      throw DimensionMismatch(std::string("block ") + (by_row ? "row " : "column ") + std::to_string(index) +
                              " has inconsistent sizes " + std::to_string(*extent) + " and " +
                              std::to_string(*here));
    }
    extent = here;
  }
  return extent;
}

}  // namespace

ExactMatrix block_assemble(const BlockGrid& grid, const FieldContext& ctx) {
  std::array<std::size_t, 2> heights{};
  std::array<std::size_t, 2> widths{};
  for (std::size_t k = 0; k < 2; ++k) {
    auto h = block_extent(grid, k, true);
    auto w = block_extent(grid, k, false);
    if (!h || !w) throw DimensionMismatch("block size cannot be inferred from zero fills alone");
    heights[k] = *h;
    widths[k] = *w;
  }
  ExactMatrix out(heights[0] + heights[1], widths[0] + widths[1], ctx);
  for (std::size_t br = 0; br < 2; ++br) {
    for (std::size_t bc = 0; bc < 2; ++bc) {
      const Block& b = grid[br][bc];
      const std::size_t r0 = br == 0 ? 0 : heights[0];
      const std::size_t c0 = bc == 0 ? 0 : widths[0];
      switch (b.kind()) {
        case Block::Kind::Zero:
          break;
        case Block::Kind::Identity:
          for (std::size_t i = 0; i < b.identity_size(); ++i) out(r0 + i, c0 + i) = Scalar::one(ctx);
          break;
        case Block::Kind::Dense:
          if (!(b.dense().context() == ctx)) throw ContextMismatch("block context differs from target");
          for (std::size_t i = 0; i < b.dense().rows(); ++i)
            for (std::size_t j = 0; j < b.dense().cols(); ++j) out(r0 + i, c0 + j) = b.dense()(i, j);
          break;
      }
    }
  }
  return out;
}

}  // namespace signrank
