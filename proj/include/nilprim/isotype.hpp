#pragma once

// Structure of nilpotent matrix groups of the form (2-group) x (odd cyclic).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "nilprim/group.hpp"

namespace nilprim {

enum class Sylow2Kind { trivial, cyclic, quaternion8, generalised_quaternion, dihedral, semidihedral };

std::string_view to_string(Sylow2Kind k);
/// Accepts the long names above and the short forms q8, gq, dh, sd, c.
Sylow2Kind parse_sylow2_kind(std::string_view s);

/// Isomorphism type of a group (Sylow 2-subgroup) x (cyclic odd part).
struct IsoType {
  Sylow2Kind sylow2_kind = Sylow2Kind::trivial;
  std::uint64_t sylow2_order = 1;
  std::uint64_t odd_order = 1;

  friend auto operator<=>(const IsoType&, const IsoType&) = default;
  friend bool operator==(const IsoType&, const IsoType&) = default;
};

/// "Q8 x C13", "SD16", "C8" and so on.
std::string describe(const IsoType& t);
/// Throws InvalidArgument when the order constraints of the kind fail.
void validate(const IsoType& t);

/// Everything the classifier needs to know about a group in the family:
/// a generates a cyclic subgroup of index <= 2 in the Sylow 2-subgroup,
/// g (when present) lies outside it, c generates the odd part.
struct FamilyStructure {
  IsoType isotype;
  Subgroup sylow2;
  Subgroup odd;
  std::uint32_t a = 0;
  std::optional<std::uint32_t> g;
  std::uint32_t c = 0;
};

/// Every Sylow subgroup normal, tested by counting p-elements.
bool is_nilpotent(const GroupIndex& G);

/// Throws NotInFamily when G is not nilpotent, its odd part is not cyclic, or
/// its Sylow 2-subgroup is not cyclic/quaternion/dihedral/semidihedral.
FamilyStructure analyze_family(const GroupIndex& G);

IsoType recognize_isotype(const MatrixGroup& G);

/// (Sylow 2-subgroup, odd Hall subgroup). The odd part has at most one
/// generator. Throws NotInFamily if G is not nilpotent or its odd part is not
/// cyclic.
std::pair<MatrixGroup, MatrixGroup> decompose_2_odd(const MatrixGroup& G);

/// Normal closure of the commutators of the generators.
MatrixGroup derived_subgroup(const MatrixGroup& G);
Subgroup derived_subgroup_of(const GroupIndex& G);

/// All of G as a Subgroup of its own index.
Subgroup whole_group(const GroupIndex& G);

}  // namespace nilprim
