#pragma once

#include <string>
#include <vector>

#include "itercat/format.hpp"

namespace itercat {

/// Total order on `labels` as a level-1 category over a Boolean base.
VCat boolean_chain(const MonoidalPtr& v, std::vector<std::string> labels);

/// Level-2 category over a Boolean base whose homs are chains and whose
/// composition adds positions: index p of hom(y,z) after index q of
/// hom(x,y) is index p + q of hom(x,z). Units pick index 0.
EnCatPtr additive_2cat(std::string name, const MonoidalPtr& v, std::vector<std::string> objects,
                       std::vector<EnCatPtr> homs);

/// Names of the bundled files, without the ".cat" suffix.
std::vector<std::string> bundled_files();

/// Bindings of a bundled file, built from the library constructions.
/// Throws DanglingReference for an unknown name.
Workspace bundled(const std::string& file);

/// Canonical text of every binding of `ws`, in binding order.
std::string export_workspace(const Workspace& ws);

}  // namespace itercat
