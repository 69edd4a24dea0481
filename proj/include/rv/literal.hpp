#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rv/diagram.hpp"
#include "rv/error.hpp"

namespace rv {

// Context literal: variant name + "{d,r}", e.g. "V{2,1}", "V2{3,2}",
// "bV{2,1}", "RV{2,1}", "RV+{3,1}".
GroupContext parse_context(std::string_view text);
std::string serialize_context(const GroupContext& ctx);
std::string variant_name(Variant v);

// Diagram literal: [context] "(" forest "|" decoration "|" forest ")".
// Decoration literals: "p:2,3,1" (permutation image list), "s:1,0;p:2,1"
// (signed permutation), "b:1,-2" / "b:" (braid word), "t:1,0;b:1" (ribbon).
// A context prefix must agree with `ctx` when both are present; without a
// prefix, `ctx` is required.
Diagram parse_diagram(std::string_view text, const std::optional<GroupContext>& ctx);

// Canonical text: context prefix, canonical forest text, and the decoration
// with any braid word respelled from its Garside form.
std::string serialize_diagram(const Diagram& x);

// Point literal: integers separated by spaces or commas. With r == 1 every
// integer is a word letter (the root is implicit); with r > 1 the first
// integer is the root index.
CantorPoint parse_point(std::string_view text, const GroupContext& ctx);
std::string serialize_point(const CantorPoint& p, const GroupContext& ctx);

}  // namespace rv
