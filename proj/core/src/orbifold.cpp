#include "vframe/orbifold.hpp"

#include <algorithm>
#include <functional>

#include "vframe/errors.hpp"

namespace vframe {

namespace {

void require_length(const StructureCodes& s, const BinaryWord& w, const char* what) {
  if (w.length() != s.frame_length()) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(w.length()) +
                         ", frame length is " + std::to_string(s.frame_length()));
  }
}

void require_holomorphic(const StructureCodes& s) {
  for (const auto& check : validate(s).checks) {
    if (!check.passed) {
      throw HypothesisError("input structure codes fail '" + check.name + "'" +
                            (check.detail.empty() ? "" : ": " + check.detail));
    }
  }
  if (s.c() != dual(s.d())) {
    throw HypothesisError("input is not holomorphic: C != dual(D)");
  }
}

}  // namespace

TauInvolution::TauInvolution(StructureCodes codes, BinaryWord beta)
    : codes_(std::move(codes)), beta_(std::move(beta)) {
  require_length(codes_, beta_, "beta");
}

bool TauInvolution::is_identity() const { return contains(dual(codes_.d()), beta_); }

int tau_sign(const TauInvolution& t, const BinaryWord& alpha) {
  if (alpha.length() != t.codes().frame_length() || !contains(t.codes().d(), alpha)) {
    throw DomainError("tau_sign: " + alpha.to_string() + " is not in D");
  }
  return inner_product(alpha, t.beta()) == 0 ? 1 : -1;
}

bool tau_equivalent(const TauInvolution& t1, const TauInvolution& t2) {
  if (t1.codes() != t2.codes()) {
    throw DomainError("tau_equivalent: involutions act on different structure codes");
  }
  return contains(dual(t1.codes().d()), t1.beta() + t2.beta());
}

LinearCode fixed_subcode(const LinearCode& d, const BinaryWord& delta) {
  if (delta.length() != d.length()) throw DimensionError("fixed_subcode: length mismatch");
  // Use the first generator pairing to 1 to cancel the others; drop it.
  const auto& gens = d.generators();
  const auto pivot = std::find_if(gens.begin(), gens.end(), [&](const BinaryWord& g) {
    return inner_product(g, delta) != 0;
  });
  if (pivot == gens.end()) return d;
  std::vector<BinaryWord> rows;
  rows.reserve(gens.size() - 1);
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    if (it == pivot) continue;
    rows.push_back(inner_product(*it, delta) != 0 ? *it + *pivot : *it);
  }
  return LinearCode::from_generators(d.length(), rows);
}

LinearCode fixed_subcode(const StructureCodes& s, const BinaryWord& delta) {
  require_length(s, delta, "delta");
  return fixed_subcode(s.d(), delta);
}

OrbifoldResult orbifold_transform(const StructureCodes& s, const BinaryWord& delta) {
  require_length(s, delta, "delta");
  require_holomorphic(s);
  if (contains(s.c(), delta)) {
    throw TrivialityError("delta = " + delta.to_string() +
                          " lies in C, so tau_delta is the identity");
  }

  const Parity parity = delta.weight() % 2 == 0 ? Parity::kEven : Parity::kOdd;
  LinearCode d0 = fixed_subcode(s.d(), delta);
  StructureCodes output =
      parity == Parity::kEven ? StructureCodes(extend(s.c(), delta), d0) : s;

  OrbifoldCertificates certs;
  certs.output_holomorphic = validate(output).ok() && output.c() == dual(output.d());
  certs.output_a2 = weight_two_codewords(output.c()).size();
  certs.delta_in_output_c = contains(output.c(), delta);

  return OrbifoldResult{s, delta, std::move(output), std::move(d0), parity, certs};
}

GSplit g_split(const OrbifoldResult& r) {
  if (r.parity != Parity::kEven) {
    throw DomainError("g_split needs an even-weight delta");
  }
  const LinearCode& c = r.input.c();
  const std::size_t n = c.length();

  GSplit split{StructureCodes(c, r.d0), r.delta, 0, 0, std::nullopt};
  split.plus_grade1_dimension = weight_two_codewords(c).size();

  // e_i + e_j in delta + C iff res(e_i) + res(e_j) = res(delta).
  std::vector<BinaryWord> residues;
  residues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) residues.push_back(c.reduce(BinaryWord::unit(n, i)));
  const BinaryWord target = c.reduce(r.delta);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((residues[i] + residues[j]) == target) split.minus_grade1_count++;
    }
  }

  if (c.dimension() <= kEnumerationCutoff) {
    std::size_t best = n;
    for_each_in_coset(c, r.delta, [&](const BinaryWord& w) { best = std::min(best, w.weight()); });
    split.coset_min_weight = best;
  }
  return split;
}

bool PipelineReport::all_passed() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const auto& c) { return c.passed; });
}

PipelineReport moonshine_pipeline(const StructureCodes& s) {
  const std::size_t n = s.frame_length();
  if (n < 2) throw HypothesisError("frame length must be at least 2");
  require_holomorphic(s);

  const auto weight_two = weight_two_codewords(s.c());
  if (!weight_two.empty()) {
    throw HypothesisError("C contains the weight-2 codeword " + weight_two.front().to_string() +
                          ", so V_1 != 0");
  }

  BinaryWord delta(n);
  delta.set(0);
  delta.set(1);
  if (contains(s.c(), delta)) {
    throw HypothesisError("delta = " + delta.to_string() + " lies in C");
  }

  OrbifoldResult orbifold = orbifold_transform(s, delta);
  GSplit split = g_split(orbifold);
  const auto& certs = orbifold.certificates;

  std::vector<PipelineCertificate> out;
  out.push_back({kCertHolomorphic, certs.output_holomorphic,
                 certs.output_holomorphic ? "C~ = dual(D0)" : "C~ != dual(D0)"});
  out.push_back({kCertNonzeroV1, certs.delta_in_output_c && certs.output_a2 >= 1,
                 "delta in C~: " + std::string(certs.delta_in_output_c ? "yes" : "no") +
                     ", A2(C~) = " + std::to_string(certs.output_a2)});
  out.push_back({kCertAbelian, split.abelian_certificate(),
                 "plus grade-1 dim = " + std::to_string(split.plus_grade1_dimension) +
                     ", minus grade-1 count = " + std::to_string(split.minus_grade1_count)});
  const std::size_t dim_d = s.d().dimension();
  const std::size_t dim_d0 = orbifold.d0.dimension();
  out.push_back({kCertIndex, dim_d0 + 1 == dim_d,
                 "dim D = " + std::to_string(dim_d) + ", dim D0 = " + std::to_string(dim_d0)});

  return PipelineReport{delta, std::move(orbifold), std::move(split), std::move(out)};
}

std::vector<DeltaCandidate> find_delta(const StructureCodes& s, std::size_t max_weight) {
  const std::size_t n = s.frame_length();
  std::vector<DeltaCandidate> out;
  std::vector<std::size_t> positions;

  // Lexicographic k-subsets of {0..n-1}.
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                             std::size_t remaining) {
    if (remaining == 0) {
      BinaryWord delta(n);
      for (std::size_t p : positions) delta.set(p);
      if (!contains(s.c(), delta)) {
        out.push_back({delta, fixed_subcode(s.d(), delta).dimension()});
      }
      return;
    }
    for (std::size_t p = start; p + remaining <= n; ++p) {
      positions.push_back(p);
      choose(p + 1, remaining - 1);
      positions.pop_back();
    }
  };
  for (std::size_t w = 2; w <= std::min(max_weight, n); w += 2) choose(0, w);
  return out;
}

}  // namespace vframe
