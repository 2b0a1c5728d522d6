#pragma once

#include <string>

#include "pcat/partition.hpp"

namespace pcat {

  struct RenderOptions {
    // ∘ and ● instead of o and *.
    bool unicode = false;
  };

  // Two-row string diagram: upper points on top, lower points at the
  // bottom, blocks drawn with |, - and + corners. Cells where lines of two
  // blocks meet are marked X. The last line is the canonical text of p.
  std::string render(Partition const& p, RenderOptions const& options = {});

}  // namespace pcat
