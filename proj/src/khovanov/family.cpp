#include "symknot/error.hpp"
#include "symknot/khovanov/khovanov.hpp"

namespace symknot::khovanov {

bool FamilyReport::passed() const {
  if (vacuous) return true;
  if (!k || !base || checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

FamilyReport family_experiment(const diagram::TangleCode& half, int lo, int hi, int max_crossings) {
  half.validate();
  if (half.slots != 1) throw Error(ErrorKind::Precondition, "family experiment needs a half with one twist slot");
  if (lo < 1 || hi < lo) throw Error(ErrorKind::InvalidArgument, "family range must satisfy 1 <= lo <= hi");
  // A knot is trivial exactly when its Khovanov homology is 2-dimensional.
  if (khovanov_homology(symunion::partial_knot(half), max_crossings).total() != 2) {
    throw Error(ErrorKind::Precondition, "partial knot of the half is not the unknot");
  }

  FamilyReport report;
  for (int n = lo; n <= hi; ++n) {
    FamilyMember member;
    member.n = n;
    member.kh = khovanov_homology(symunion::build_symmetric_union({half, {n}, ""}), max_crossings);
    member.nontrivial = member.kh.total() > 2;
    // Symmetric unions are ribbon, so the Lee generators sit at (0, +-1).
    if (member.nontrivial) member.maximal = maximal_bigrading(member.kh, 0);
    report.members.push_back(std::move(member));
  }

  const FamilyMember* first = nullptr;
  for (const auto& m : report.members) {
    if (m.nontrivial) {
      first = &m;
      break;
    }
  }
  if (!first) {
    report.vacuous = true;
    report.message = "no nontrivial member found";
    return report;
  }
  if (first->n != lo && lo > 1) {
    report.message = "minimal nontrivial member is K_" + std::to_string(first->n);
  }
  report.k = first->n;
  report.base = first->maximal;
  const int a = report.base->a;
  const int b = report.base->b;
  for (const auto& member : report.members) {
    if (member.n < *report.k) continue;
    FamilyCheck check;
    check.m = member.n - *report.k;
    const int m = check.m;
    check.maximal_matches = member.maximal && *member.maximal == *report.base;
    check.claim_grading = {-a - m, -b - 2 * (m + 1)};
    check.claim_nonzero = member.kh.at(check.claim_grading.first, check.claim_grading.second) != 0;
    check.witness = {a + m, b + 2 * (m + 1)};
    check.witness_dim = member.kh.at(check.witness.first, check.witness.second);
    check.mirror_dim = member.kh.at(-check.witness.first, -check.witness.second);
    check.asymmetric = check.witness_dim != check.mirror_dim;
    report.checks.push_back(check);
  }
  if (report.message.empty()) report.message = report.passed() ? "all checks passed" : "a check failed";
  return report;
}

}  // namespace symknot::khovanov
