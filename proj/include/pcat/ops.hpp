#pragma once

#include <array>
#include <cstddef>
#include <variant>

#include "pcat/partition.hpp"

namespace pcat {

  class ProfileMismatch : public PartitionError {
   public:
    using PartitionError::PartitionError;
  };

  class ColorMismatch : public PartitionError {
   public:
    using PartitionError::PartitionError;
  };

  enum class RotationKind : std::uint8_t {
    upper_left_down,
    lower_left_up,
    upper_right_down,
    lower_right_up,
    one_line_left_to_right,
    one_line_right_to_left
  };

  Partition tensor(Partition const& p, Partition const& q);

  // q on top of p: the lower row of q is glued to the upper row of p.
  Partition compose(Partition const& q, Partition const& p);

  // Composition of q with (identities ⊗ p ⊗ identities), p's upper row
  // aligned with q's lower row starting at offset.
  Partition pad_compose(Partition const& q, Partition const& p,
                        std::size_t offset);

  Partition involution(Partition const& p);
  Partition vertical_reflection(Partition const& p);
  Partition invert_colors(Partition const& p);
  Partition verticolor_reflection(Partition const& p);

  Partition rotate(Partition const& p, RotationKind kind);

  // The one-line form as a partition without upper points.
  Partition to_one_line(Partition const& p);

  // Merges the blocks of the neighbouring points (index, index + 1) of a row
  // and removes both points; their colors must be inverse.
  Partition erase_neighbours(Partition const& p, Row row, std::size_t index);

  // Splices the lower points of q into the lower row of p before the lower
  // point gap_index of p.
  Partition insert_between_legs(Partition const& p, Partition const& q,
                                std::size_t gap_index);

  Partition identity(Color c);
  Partition identity(std::span<Color const> colors);

  // {⊓wb, ⊓bw, identity w, identity b}
  std::array<Partition, 4> base_partitions();

  namespace rewrite {
    // Point index (reading order) becomes a singleton.
    struct DisconnectPoint {
      std::size_t index;
    };
    // Merges the blocks of the points gap - 1 and gap of one row.
    struct ConnectAdjacentBlocks {
      std::size_t gap;
    };
    // Moves the singleton at reading index from to reading index to, within
    // its row.
    struct ShiftSingleton {
      std::size_t from;
      std::size_t to;
    };
    // Swaps the points index and index + 1 of one row and inverts both
    // colors; one of them must be a singleton and their colors inverse.
    struct SwapSingletonInvert {
      std::size_t index;
    };
  }  // namespace rewrite

  using RewriteKind = std::variant<rewrite::DisconnectPoint,
                                   rewrite::ConnectAdjacentBlocks,
                                   rewrite::ShiftSingleton,
                                   rewrite::SwapSingletonInvert>;

  Partition derived_rewrite(Partition const& p, RewriteKind const& kind);

}  // namespace pcat
