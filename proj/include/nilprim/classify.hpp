#pragma once

// Deciding nilpotent primitivity and listing the conjugacy classes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilprim/group.hpp"
#include "nilprim/isotype.hpp"
#include "nilprim/oracle.hpp"

namespace nilprim {

enum class VerdictKind { not_nilpotent, reducible, imprimitive, primitive };

std::string_view to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::not_nilpotent;
  std::vector<std::string> trace;
};

struct DecisionOptions {
  std::uint64_t sweep_cap = kSweepCap;
  /// Largest group handed to the block-system oracle for groups outside the
  /// classified family.
  std::size_t oracle_group_cap = 10000;
};

/// Throws InvalidArgument in characteristic 2.
Verdict is_nilpotent_primitive(const MatrixGroup& G, const DecisionOptions& opts = {});

enum class CaseTag { abelian, deg2, q8_case2, case3 };

std::string_view to_string(CaseTag c);
CaseTag parse_case_tag(std::string_view s);

struct OracleCertificate {
  bool irreducible = false;
  std::size_t block_systems = 0;
  std::size_t centralizer_dim = 0;
  std::size_t enveloping_dim = 0;
};

struct ClassRecord {
  int n = 0;
  std::uint64_t q = 0;
  CaseTag case_tag = CaseTag::abelian;
  IsoType isotype;
  std::uint64_t order = 0;
  std::vector<Matrix> generators;
  /// Divisibility facts or the branch of the decision procedure that
  /// established primitivity.
  std::vector<std::string> certificate;
  std::optional<OracleCertificate> oracle;

  MatrixGroup group() const;
};

struct EnumerateOptions {
  bool nonabelian_only = false;
  /// Attach oracle certificates (sweep, block systems, centraliser).
  bool certify = false;
  int jobs = 0;  // 0 = OpenMP default
  DecisionOptions decision;
};

/// Throws InvalidArgument unless n > 1 and q is an odd prime power.
std::vector<ClassRecord> enumerate_classes(int n, std::uint64_t q, const EnumerateOptions& opts = {});

/// r(t - 1) for n = 2 and q = 3 mod 4; the enumerated count for n = 2m,
/// m odd; 0 otherwise.
std::uint64_t count_nonabelian_classes(int n, std::uint64_t q);

struct SameClassResult {
  bool same = false;
  /// X with X^-1 G X = H, present when requested and found.
  std::optional<Matrix> certificate;
};

/// Class equality by isomorphism type. With certify, an explicit conjugating
/// matrix is also searched for when the types agree. Throws InvalidArgument
/// unless both groups are nilpotent primitive of the same degree and field.
SameClassResult same_class(const MatrixGroup& G, const MatrixGroup& H, bool certify = false,
                           const ConjugacyOptions& opts = {});

}  // namespace nilprim
