#include "martensite/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "martensite/error.hpp"
#include "martensite/linalg.hpp"

namespace martensite {

Permutation::Permutation() {
  for (int i = 0; i < kVariantCount; ++i) img_[static_cast<size_t>(i)] = i + 1;
}

Permutation::Permutation(const std::array<int, kVariantCount>& images) : img_(images) {
  std::array<bool, kVariantCount> seen{};
  for (int x : img_) {
    if (x < 1 || x > kVariantCount || seen[static_cast<size_t>(x - 1)])
      throw Error(ErrorCode::InvalidParams, "permutation images must be a bijection of 1..12");
    seen[static_cast<size_t>(x - 1)] = true;
  }
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::array<int, kVariantCount> r;
  for (int i = 1; i <= kVariantCount; ++i) r[static_cast<size_t>(i - 1)] = p(q(i));
  return Permutation(r);
}

Permutation Permutation::inverse() const {
  std::array<int, kVariantCount> r;
  for (int i = 1; i <= kVariantCount; ++i) r[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(r);
}

bool Permutation::is_identity() const { return *this == Permutation(); }

std::vector<int> Permutation::apply(const std::vector<int>& tuple) const {
  std::vector<int> out;
  out.reserve(tuple.size());
  for (int i : tuple) out.push_back((*this)(i));
  return out;
}

std::vector<int> Permutation::apply_set(const std::vector<int>& set) const {
  auto out = apply(set);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::array<bool, kVariantCount> seen{};
  for (int i = 1; i <= kVariantCount; ++i) {
    if (seen[static_cast<size_t>(i - 1)] || (*this)(i) == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    do {
      if (!first) os << " ";
      os << j;
      first = false;
      seen[static_cast<size_t>(j - 1)] = true;
      j = (*this)(j);
    } while (j != i);
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

const Permutation& inversion() {
  static const Permutation r0({2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11});
  return r0;
}

const Permutation& rotation_generator(int axis) {
  static const Permutation r[3] = {
      Permutation({6, 5, 8, 7, 4, 3, 2, 1, 11, 12, 10, 9}),
      Permutation({12, 11, 9, 10, 8, 7, 5, 6, 2, 1, 3, 4}),
      Permutation({3, 4, 2, 1, 10, 9, 12, 11, 7, 8, 5, 6}),
  };
  if (axis < 1 || axis > 3) throw Error(ErrorCode::InvalidParams, "rotation axis must be 1, 2 or 3");
  return r[axis - 1];
}

Permutation permutation_from_rotation(int axis) {
  const auto& s = symbolic_variants();
  std::array<int, kVariantCount> img{};
  for (int i = 1; i <= kVariantCount; ++i) {
    auto rotated = rotation_action(axis, s[i]);
    int match = 0;
    for (int j = 1; j <= kVariantCount; ++j)
      if (rotated == s[j]) match = j;
    if (match == 0) throw Error(ErrorCode::Unsupported, "rotated strain is not a variant");
    img[static_cast<size_t>(i - 1)] = match;
  }
  return Permutation(img);
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup generate_group(const std::vector<Permutation>& generators, std::vector<std::string> labels) {
  std::set<Permutation> seen{Permutation()};
  std::deque<Permutation> queue{Permutation()};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return {std::vector<Permutation>(seen.begin(), seen.end()), std::move(labels)};
}

const PermGroup& rotation_group() {
  static const PermGroup g =
      generate_group({rotation_generator(1), rotation_generator(2), rotation_generator(3)}, {"r1", "r2", "r3"});
  return g;
}

const PermGroup& full_group() {
  static const PermGroup g = generate_group(
      {inversion(), rotation_generator(1), rotation_generator(2), rotation_generator(3)}, {"r0", "r1", "r2", "r3"});
  return g;
}

std::set<IndexTuple> orbit(const IndexTuple& x, const PermGroup& g) {
  std::set<IndexTuple> out;
  for (const auto& p : g.elements) out.insert(p.apply_set(x));
  return out;
}

namespace {

// Pairwise check of |det| and squared distance over the listed index pairs.
template <class DistFn, class DetFn>
SymmetryCheck check_pairs(const Permutation& p, const std::vector<std::pair<int, int>>& pairs, DistFn dist,
                          DetFn det_abs_equal) {
  SymmetryCheck c;
  for (auto [i, j] : pairs) {
    if (!dist(i, j, p(i), p(j))) {
      c.holds = false;
      c.witness = {i, j};
      c.reason = "distance not preserved";
      return c;
    }
    if (!det_abs_equal(i, j, p(i), p(j))) {
      c.holds = false;
      c.witness = {i, j};
      c.reason = "determinant not preserved up to sign";
      return c;
    }
  }
  return c;
}

std::vector<std::pair<int, int>> every_pair() {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= kVariantCount; ++i)
    for (int j = i + 1; j <= kVariantCount; ++j) out.emplace_back(i, j);
  return out;
}

SymmetryCheck numeric_check(const Permutation& p, const std::vector<std::pair<int, int>>& pairs, const VariantSet& v) {
  auto dist = [&](int i, int j, int a, int b) {
    return norm_sq(SymStrain<Rational>(v[i] - v[j])) == norm_sq(SymStrain<Rational>(v[a] - v[b]));
  };
  auto det = [&](int i, int j, int a, int b) {
    return (v[i] - v[j]).det().abs() == (v[a] - v[b]).det().abs();
  };
  return check_pairs(p, pairs, dist, det);
}

}  // namespace

SymmetryCheck is_symmetry(const Permutation& p, const VariantSet& v) { return numeric_check(p, every_pair(), v); }

SymmetryCheck is_symmetry_symbolic(const Permutation& p) {
  const auto& s = symbolic_variants();
  auto dist = [&](int i, int j, int a, int b) {
    return norm_sq(SymStrain<Polynomial>(s[i] - s[j])) == norm_sq(SymStrain<Polynomial>(s[a] - s[b]));
  };
  auto det = [&](int i, int j, int a, int b) {
    Polynomial x = (s[i] - s[j]).det(), y = (s[a] - s[b]).det();
    return x == y || x == -y;
  };
  SymmetryCheck c = check_pairs(p, every_pair(), dist, det);
  c.symbolic = true;
  return c;
}

SymmetryCheck is_tuple_symmetry(const Permutation& p, const TupleFamily& family, const VariantSet& v) {
  std::set<IndexTuple> members;
  for (const auto& t : family) {
    IndexTuple s = t;
    std::sort(s.begin(), s.end());
    members.insert(s);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& t : members) {
    if (!members.count(p.apply_set(t)))
      throw Error(ErrorCode::FamilyNotClosed, "permutation " + p.cycles() + " does not preserve the family");
    for (size_t a = 0; a < t.size(); ++a)
      for (size_t b = a + 1; b < t.size(); ++b) pairs.emplace_back(t[a], t[b]);
  }
  return numeric_check(p, pairs, v);
}

TupleFamily all_pairs() {
  TupleFamily out;
  for (auto [i, j] : every_pair()) out.push_back({i, j});
  return out;
}

TupleFamily compatible_pairs(const VariantSet& v) {
  TupleFamily out;
  for (auto [i, j] : every_pair())
    if (is_compatible(v[i], v[j])) out.push_back({i, j});
  return out;
}

TupleFamily incompatible_pairs(const VariantSet& v) {
  TupleFamily out;
  for (auto [i, j] : every_pair())
    if (!is_compatible(v[i], v[j])) out.push_back({i, j});
  return out;
}

TupleFamily incompatible_triples(const VariantSet& v) {
  TupleFamily out;
  for (int i = 1; i <= kVariantCount; ++i)
    for (int j = i + 1; j <= kVariantCount; ++j)
      for (int k = j + 1; k <= kVariantCount; ++k)
        if (!is_compatible(v[i], v[j]) && !is_compatible(v[j], v[k]) && !is_compatible(v[i], v[k]))
          out.push_back({i, j, k});
  return out;
}

bool inversion_matches_epsilon_negation() {
  const auto& s = symbolic_variants();
  for (int i = 1; i <= kVariantCount; ++i) {
    SymStrain<Polynomial> neg = map_strain<Polynomial>(
        s[i], [&](const Polynomial& x) { return x.substitute(s.epsilon_id, -s.epsilon); });
    if (!(neg == s[inversion()(i)])) return false;
  }
  return true;
}

LinearityReport inversion_linearity(const VariantSet& v) {
  LinearityReport r;
  Matrix<Rational> a;
  for (int i = 1; i <= kVariantCount; ++i) a.emplace_back(v[i].v.begin(), v[i].v.end());
  r.rank_coefficients = rank(a);
  for (size_t k = 0; k < 6; ++k) {
    Matrix<Rational> aug = a;
    for (int i = 1; i <= kVariantCount; ++i) aug[static_cast<size_t>(i - 1)].push_back(v[inversion()(i)].v[k]);
    size_t ra = rank(aug);
    r.rank_augmented.push_back(ra);
    if (ra > r.rank_coefficients) r.solvable = false;
  }
  return r;
}

}  // namespace martensite
