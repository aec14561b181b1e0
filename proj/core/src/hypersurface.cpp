#include "slc/hypersurface.hpp"

#include <array>

#include "slc/arith.hpp"
#include "slc/error.hpp"

namespace slc {

namespace {

void check_twist(long k) {
  if (k > kMaxTwist || k < -kMaxTwist) {
    throw Error(ErrorCode::InvalidArgument, "twist out of supported range: " + std::to_string(k));
  }
}

std::string twist_name(const std::string& sheaf, long k) {
  if (k == 0) return sheaf;
  return sheaf + "(" + std::to_string(k) + ")";
}

// Terms of the long exact sequence of 0 -> A -> B -> C -> 0 are appended as
// H^0(A), H^0(B), H^0(C), H^1(A), ...; at(i, slot) indexes them.
struct Triple {
  std::string a, b, c;
};

void append_les(ExactSequence& seq, const Triple& names, int top,
                const std::vector<std::array<std::optional<long>, 3>>& dims) {
  for (int i = 0; i <= top; ++i) {
    const std::string h = "H^" + std::to_string(i);
    seq.add_term(h + "(" + names.a + ")", dims[static_cast<std::size_t>(i)][0]);
    seq.add_term(h + "(" + names.b + ")", dims[static_cast<std::size_t>(i)][1]);
    seq.add_term(h + "(" + names.c + ")", dims[static_cast<std::size_t>(i)][2]);
  }
}

std::size_t at(int degree, int slot) { return static_cast<std::size_t>(3 * degree + slot); }

}  // namespace

CohomologyTable line_bundle_cohomology_p3(long k) {
  check_twist(k);
  const long h0 = binomial(k + 3, 3).get_si();
  const long h3 = binomial(-k - 1, 3).get_si();
  return {twist_name("O_P3", k), {h0, 0, 0, h3}};
}

ExactSequence euler_sequence_p3(long k) {
  check_twist(k + 1);
  const auto o = line_bundle_cohomology_p3(k);
  const auto o1 = line_bundle_cohomology_p3(k + 1);
  std::vector<std::array<std::optional<long>, 3>> dims;
  for (std::size_t i = 0; i < 4; ++i) dims.push_back({o.dims[i], 4 * o1.dims[i], std::nullopt});

  ExactSequence seq;
  append_les(seq, {o.sheaf, twist_name("O_P3", k + 1) + "^4", twist_name("T_P3", k)}, 3, dims);
  // f -> (x_0 f, ..., x_3 f) is injective on sections.
  seq.mark_injective(at(0, 0));
  // On H^3 the map is Serre dual to (g_i) -> sum x_i g_i from
  // H^0(O(-k-5))^4 onto H^0(O(-k-4)), which is onto once -k-5 >= 0.
  if (-k - 5 >= 0) seq.mark_injective(at(3, 0));
  seq.solve();
  return seq;
}

CohomologyTable tangent_p3_cohomology(long k) {
  const ExactSequence seq = euler_sequence_p3(k);
  CohomologyTable out{twist_name("T_P3", k), {}};
  for (int i = 0; i <= 3; ++i) out.dims.push_back(seq.require_dim(at(i, 2)));
  return out;
}

SurfaceInvariants surface_invariants(long d) {
  if (d < 1 || d > kMaxTwist) {
    throw Error(ErrorCode::InvalidArgument, "degree out of range: " + std::to_string(d));
  }
  SurfaceInvariants s{};
  s.K2 = d * (d - 4) * (d - 4);
  s.e = d * d * d - 4 * d * d + 6 * d;
  s.pg = binomial(d - 1, 3).get_si();
  s.q = 0;
  s.chi = (s.K2 + s.e) / 12;
  if (12 * s.chi != s.K2 + s.e || s.chi != 1 - s.q + s.pg) {
    throw Error(ErrorCode::InconsistentSequence, "Noether identity failed for d = " + std::to_string(d));
  }
  return s;
}

TangentChase tangent_cohomology_chase(long d) {
  if (d < 5) {
    throw Error(ErrorCode::DegreeTooSmall,
                "tangent cohomology needs d >= 5 (general type), got " + std::to_string(d));
  }
  check_twist(d);
  const std::optional<long> unknown;

  // N_S = O_S(d) from 0 -> O -> O(d) -> N -> 0. N is supported on a surface.
  ExactSequence normal;
  {
    const auto o = line_bundle_cohomology_p3(0);
    const auto od = line_bundle_cohomology_p3(d);
    std::vector<std::array<std::optional<long>, 3>> dims;
    for (std::size_t i = 0; i < 4; ++i) dims.push_back({o.dims[i], od.dims[i], unknown});
    dims[3][2] = 0;
    append_les(normal, {"O_P3", od.sheaf, "N_S"}, 3, dims);
    normal.solve();
  }

  // T|_S from 0 -> T(-d) -> T -> T|_S -> 0.
  ExactSequence restricted;
  {
    const auto tmd = tangent_p3_cohomology(-d);
    const auto t0 = tangent_p3_cohomology(0);
    std::vector<std::array<std::optional<long>, 3>> dims;
    for (std::size_t i = 0; i < 4; ++i) dims.push_back({tmd.dims[i], t0.dims[i], unknown});
    dims[3][2] = 0;
    append_les(restricted, {tmd.sheaf, "T_P3", "T_P3|S"}, 3, dims);
    restricted.solve();
  }

  // 0 -> T_S -> T|_S -> N_S -> 0 on the surface; h^0(T_S) = 0 for general type.
  ExactSequence tangent;
  {
    std::vector<std::array<std::optional<long>, 3>> dims;
    for (int i = 0; i <= 2; ++i) {
      dims.push_back({i == 0 ? std::optional<long>(0) : unknown,
                      restricted.require_dim(at(i, 2)), normal.require_dim(at(i, 2))});
    }
    append_les(tangent, {"T_S", "T_P3|S", "N_S"}, 2, dims);
    tangent.solve();
  }

  CohomologyTable result{"T_S", {}};
  for (int i = 0; i <= 2; ++i) result.dims.push_back(tangent.require_dim(at(i, 0)));

  const SurfaceInvariants inv = surface_invariants(d);
  if (result.dims[1] - result.dims[2] != virtual_dimension(inv.K2, inv.chi)) {
    throw Error(ErrorCode::InconsistentSequence,
                "h^1 - h^2 differs from 10 chi - 2 K^2 for d = " + std::to_string(d));
  }
  return {std::move(normal), std::move(restricted), std::move(tangent), std::move(result)};
}

CohomologyTable tangent_cohomology(long d) { return tangent_cohomology_chase(d).result; }

long virtual_dimension(long K2, long chi) { return 10 * chi - 2 * K2; }

}  // namespace slc
