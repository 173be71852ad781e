// Copyright 2026 The hicone Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hicone/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

namespace hicone {

MonomialOrder::MonomialOrder(OrderKind kind, int block) : kind_(kind), block_(block) {
  for (int i = 0; i < block; ++i) mask_ |= 0xffull << (8 * i);
}

MonomialOrder MonomialOrder::elimination(int block) {
  if (block < 0 || block > kMaxVars) throw DomainError("elimination block out of range");
  return MonomialOrder(OrderKind::kElimination, block);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::kGrevlex:
      return "grevlex";
    case OrderKind::kLex:
      return "lex";
    case OrderKind::kElimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Exact: each prefix product is itself a binomial coefficient.
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

namespace {

template <FieldElement K>
using TermVec = std::vector<Term<K>>;

template <FieldElement K>
struct Element {
  TermVec<K> terms;  // descending in the active order, monic
  int sugar = 0;
  Monomial lm() const { return terms.front().monomial; }
};

// Degree-d monomials in nvars variables ranked monotonically in grevlex:
// rank 0 is x_{n-1}^d and the top rank is x_0^d.
class DegreeTable {
 public:
  DegreeTable(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    monomials_.resize(static_cast<std::size_t>(binomial(degree + nvars - 1, nvars - 1)));
    std::array<int, kMaxVars> e{};
    fill(e, nvars - 1, degree);
  }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  Monomial at(std::size_t r) const { return monomials_[r]; }
  std::vector<std::pair<int, int>>& reducer_cache() { return cache_; }

  static std::size_t rank(Monomial m, int nvars) {
    std::size_t r = 0;
    int rest = m.degree();
    for (int j = nvars - 1; j >= 1; --j) {
      int e = m.exponent(j);
      r += static_cast<std::size_t>(binom(rest - e + j - 1, j));
      rest -= e;
    }
    return r;
  }

 private:
  static std::int64_t binom(int n, int k) {
    static const auto table = [] {
      std::vector<std::vector<std::int64_t>> t(kMaxDegree + kMaxVars + 2);
      for (std::size_t a = 0; a < t.size(); ++a) {
        t[a].assign(kMaxVars + 1, 0);
        for (int b = 0; b <= kMaxVars; ++b) t[a][b] = binomial(static_cast<std::int64_t>(a), b);
      }
      return t;
    }();
    if (n < 0 || k < 0) return 0;
    return table[n][k];
  }

  void fill(std::array<int, kMaxVars>& e, int var, int rest) {
    if (var == 0) {
      e[0] = rest;
      Monomial m = Monomial::from_exponents(std::span<const int>(e.data(), nvars_));
      monomials_[rank(m, nvars_)] = m;
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      e[var] = k;
      fill(e, var - 1, rest - k);
    }
    e[var] = 0;
  }

  int nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::vector<std::pair<int, int>> cache_;  // (reducer index or -1, basis size checked)
};

template <FieldElement K>
class Engine {
 public:
  using Field = typename K::field_type;

  Engine(int nvars, Field field, MonomialOrder order, GroebnerOptions options, bool homogeneous)
      : nvars_(nvars), field_(field), order_(order), options_(options) {
    if constexpr (std::is_same_v<K, Fp>) {
      dense_ = homogeneous && order.kind() == OrderKind::kGrevlex && nvars >= 1;
    } else {
      (void)homogeneous;
    }
  }

  GroebnerBasis<K> run(const std::vector<Polynomial<K>>& gens) {
    std::vector<Element<K>> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      Element<K> e{sorted_terms(g), 0};
      e.sugar = g.degree();
      input.push_back(std::move(e));
    }
    std::sort(input.begin(), input.end(), [this](const Element<K>& a, const Element<K>& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& e : input) {
      if (unit_) break;
      Element<K> r = reduce(std::move(e));
      make_monic(r.terms);
      if (!r.terms.empty()) insert(std::move(r));
    }
    while (!unit_ && !pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_reduced;
      Element<K> s = spoly(p);
      Element<K> r = reduce(std::move(s));
      if (r.terms.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(r.terms);
      insert(std::move(r));
    }
    return finish();
  }

 private:
  struct Pair {
    int sugar;
    Monomial lcm;
    int i, j;
  };
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  TermVec<K> sorted_terms(const Polynomial<K>& g) const {
    TermVec<K> t = g.terms();
    if (order_.kind() != OrderKind::kGrevlex) {
      std::sort(t.begin(), t.end(), [this](const Term<K>& a, const Term<K>& b) {
        return order_.compare(a.monomial, b.monomial) > 0;
      });
    }
    make_monic(t);
    return t;
  }

  static void make_monic(TermVec<K>& t) {
    if (t.empty() || t.front().coefficient.is_one()) return;
    K inv = t.front().coefficient.inverse();
    for (auto& x : t) x.coefficient = x.coefficient * inv;
  }

  void count_step() {
    ++stats_.reduction_steps;
    if (options_.step_cap != 0 && stats_.reduction_steps > options_.step_cap) {
      throw ResourceExhausted("Groebner basis step cap of " + std::to_string(options_.step_cap) +
                              " reduction steps exhausted");
    }
  }

  Element<K> spoly(const Pair& p) {
    const auto& a = basis_[p.i];
    const auto& b = basis_[p.j];
    Monomial ta = a.lm().quotient_of(p.lcm);
    Monomial tb = b.lm().quotient_of(p.lcm);
    if constexpr (std::is_same_v<K, Fp>) {
      if (dense_) return dense_spoly(a, ta, b, tb, p.sugar);
    }
    // Both are monic, so S = ta*a - tb*b with the leading terms cancelling.
    TermVec<K> out;
    merge_sub(a.terms, 1, ta, field_.one(), b.terms, 1, tb, out);
    return {std::move(out), p.sugar};
  }

  // out = ta*A[from_a..] - c*tb*B[from_b..].
  void merge_sub(const TermVec<K>& A, std::size_t from_a, Monomial ta, const K& c,
                 const TermVec<K>& B, std::size_t from_b, Monomial tb, TermVec<K>& out) const {
    out.clear();
    out.reserve(A.size() + B.size());
    std::size_t i = from_a, j = from_b;
    while (i < A.size() || j < B.size()) {
      if (j == B.size()) {
        out.push_back({A[i].monomial * ta, A[i].coefficient});
        ++i;
        continue;
      }
      Monomial mb = B[j].monomial * tb;
      if (i == A.size()) {
        out.push_back({mb, -(c * B[j].coefficient)});
        ++j;
        continue;
      }
      Monomial ma = A[i].monomial * ta;
      int cmp = order_.compare(ma, mb);
      if (cmp > 0) {
        out.push_back({ma, A[i].coefficient});
        ++i;
      } else if (cmp < 0) {
        out.push_back({mb, -(c * B[j].coefficient)});
        ++j;
      } else {
        K v = A[i].coefficient - c * B[j].coefficient;
        if (!v.is_zero()) out.push_back({ma, v});
        ++i;
        ++j;
      }
    }
  }

  int find_reducer(Monomial m) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!redundant_[k] && basis_[k].lm().divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  // Exact remainder (not normalized) on division by the current basis.
  Element<K> reduce(Element<K> p) {
    if constexpr (std::is_same_v<K, Fp>) {
      if (dense_) return dense_reduce(std::move(p));
    }
    TermVec<K> result;
    TermVec<K> cur = std::move(p.terms);
    TermVec<K> scratch;
    std::size_t pos = 0;
    while (pos < cur.size()) {
      Monomial m = cur[pos].monomial;
      int k = find_reducer(m);
      if (k < 0) {
        result.push_back(cur[pos]);
        ++pos;
        continue;
      }
      count_step();
      const auto& g = basis_[k];
      Monomial t = g.lm().quotient_of(m);
      p.sugar = std::max(p.sugar, g.sugar + t.degree());
      K c = cur[pos].coefficient;
      merge_sub(cur, pos + 1, Monomial(), c, g.terms, 1, t, scratch);
      cur.swap(scratch);
      pos = 0;
    }
    return {std::move(result), p.sugar};
  }

  DegreeTable& table(int degree) {
    auto it = tables_.find(degree);
    if (it == tables_.end()) it = tables_.emplace(degree, DegreeTable(nvars_, degree)).first;
    return it->second;
  }

  Element<K> dense_spoly(const Element<K>& a, Monomial ta, const Element<K>& b, Monomial tb,
                         int sugar) {
    Element<K> out;
    out.sugar = sugar;
    // Materialize sparsely; dense_reduce scatters it.
    merge_sub(a.terms, 1, ta, field_.one(), b.terms, 1, tb, out.terms);
    return out;
  }

  Element<K> dense_reduce(Element<K> p) {
    if (p.terms.empty()) return p;
    const int degree = p.terms.front().monomial.degree();
    DegreeTable& tab = table(degree);
    auto& cache = tab.reducer_cache();
    if (cache.size() != tab.size()) cache.assign(tab.size(), {-1, 0});
    const std::uint32_t q = field_.modulus();
    const std::uint64_t kLimit = 1ull << 63;
    acc_.assign(tab.size(), 0);
    std::size_t top = 0;
    for (const auto& t : p.terms) {
      std::size_t r = DegreeTable::rank(t.monomial, nvars_);
      acc_[r] = t.coefficient.value();
      top = std::max(top, r);
    }
    TermVec<K> result;
    const int nbasis = static_cast<int>(basis_.size());
    for (std::size_t r = top + 1; r-- > 0;) {
      std::uint64_t v = acc_[r] % q;
      if (v == 0) continue;
      Monomial m = tab.at(r);
      auto& slot = cache[r];
      if (slot.first < 0 && slot.second < nbasis) {
        for (int k = slot.second; k < nbasis; ++k) {
          if (basis_[k].lm().divides(m)) {
            slot.first = k;
            break;
          }
        }
        slot.second = nbasis;
      }
      if (slot.first < 0) {
        result.push_back({m, Fp(static_cast<std::uint32_t>(v), q)});
        continue;
      }
      count_step();
      const auto& g = basis_[slot.first];
      Monomial t = g.lm().quotient_of(m);
      const std::uint64_t neg = q - v;
      for (std::size_t j = 1; j < g.terms.size(); ++j) {
        std::size_t rj = DegreeTable::rank(g.terms[j].monomial * t, nvars_);
        std::uint64_t& slot_v = acc_[rj];
        slot_v += neg * g.terms[j].coefficient.value();
        if (slot_v >= kLimit) slot_v %= q;
      }
    }
    return {std::move(result), p.sugar};
  }

  void insert(Element<K> h) {
    if (h.lm().is_one()) {
      unit_ = true;
      basis_.clear();
      redundant_.clear();
      basis_.push_back(std::move(h));
      redundant_.push_back(false);
      return;
    }
    const int hi = static_cast<int>(basis_.size());
    const Monomial hlm = h.lm();
    // New candidate pairs (i, h).
    std::vector<Pair> cand;
    for (int i = 0; i < hi; ++i) {
      if (redundant_[i]) continue;
      Monomial l = basis_[i].lm().lcm(hlm);
      int s = std::max(basis_[i].sugar + (l.degree() - basis_[i].lm().degree()),
                       h.sugar + (l.degree() - hlm.degree()));
      cand.push_back({s, l, i, hi});
    }
    // Chain criterion among the new pairs: drop pairs whose lcm is a proper
    // multiple of another new lcm.
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) {
          drop[a] = true;
          break;
        }
      }
    }
    // Equal lcms: keep one, or none if any of them is coprime.
    std::map<std::uint64_t, std::vector<std::size_t>> by_lcm;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!drop[a]) by_lcm[cand[a].lcm.packed()].push_back(a);
    }
    std::vector<Pair> fresh;
    for (auto& [key, idx] : by_lcm) {
      bool any_coprime = false;
      for (std::size_t a : idx) {
        const Pair& c = cand[a];
        if (basis_[c.i].lm().coprime(hlm)) any_coprime = true;
      }
      stats_.pairs_skipped += any_coprime ? idx.size() : idx.size() - 1;
      if (!any_coprime) fresh.push_back(cand[idx.front()]);
    }
    stats_.pairs_skipped += std::count(drop.begin(), drop.end(), true);
    // Criterion B on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (hlm.divides(p.lcm) && !(basis_[p.i].lm().lcm(hlm) == p.lcm) &&
          !(basis_[p.j].lm().lcm(hlm) == p.lcm)) {
        it = pairs_.erase(it);
        ++stats_.pairs_skipped;
      } else {
        ++it;
      }
    }
    for (int i = 0; i < hi; ++i) {
      if (!redundant_[i] && hlm.divides(basis_[i].lm())) redundant_[i] = true;
    }
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
    for (auto& p : fresh) pairs_.insert(p);
  }

  GroebnerBasis<K> finish() {
    std::vector<Element<K>> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!redundant_[k]) minimal.push_back(basis_[k]);
    }
    std::sort(minimal.begin(), minimal.end(), [this](const Element<K>& a, const Element<K>& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    // Tail-reduce every element against the minimal basis.
    basis_ = minimal;
    redundant_.assign(basis_.size(), false);
    tables_.clear();
    std::vector<Polynomial<K>> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Element<K> tail{TermVec<K>(minimal[k].terms.begin() + 1, minimal[k].terms.end()),
                      minimal[k].sugar};
      TermVec<K> full{minimal[k].terms.front()};
      if (!tail.terms.empty()) {
        Element<K> r = reduce(std::move(tail));
        full.insert(full.end(), r.terms.begin(), r.terms.end());
      }
      out.push_back(Polynomial<K>::from_terms(nvars_, field_, std::move(full)));
    }
    return GroebnerBasis<K>(nvars_, field_, order_, std::move(out), stats_);
  }

  int nvars_;
  Field field_;
  MonomialOrder order_;
  GroebnerOptions options_;
  bool dense_ = false;
  bool unit_ = false;
  std::vector<Element<K>> basis_;
  std::vector<bool> redundant_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
  std::map<int, DegreeTable> tables_;
  std::vector<std::uint64_t> acc_;
  GroebnerStats stats_;
};

}  // namespace

namespace {

template <FieldElement K>
TermVec<K> terms_in_order(const Polynomial<K>& f, const MonomialOrder& order) {
  TermVec<K> t = f.terms();
  if (order.kind() != OrderKind::kGrevlex) {
    std::sort(t.begin(), t.end(), [&order](const Term<K>& a, const Term<K>& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  }
  return t;
}

}  // namespace

template <FieldElement K>
Monomial leading_monomial(const Polynomial<K>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
  Monomial best = f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    if (order.compare(t.monomial, best) > 0) best = t.monomial;
  }
  return best;
}

template <FieldElement K>
GroebnerBasis<K>::GroebnerBasis(int nvars, Field field, MonomialOrder order,
                                std::vector<Polynomial<K>> basis, GroebnerStats stats)
    : nvars_(nvars), field_(field), order_(order), basis_(std::move(basis)), stats_(stats) {
  for (const auto& g : basis_) leading_.push_back(leading_monomial(g, order_));
}

template <FieldElement K>
bool GroebnerBasis<K>::is_standard(Monomial m) const noexcept {
  for (Monomial l : leading_) {
    if (l.divides(m)) return false;
  }
  return true;
}

template <FieldElement K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  if (f.nvars() != nvars_) throw DomainError("normal_form: polynomial lives in a different ring");
  std::vector<TermVec<K>> reducers;
  reducers.reserve(basis_.size());
  for (const auto& g : basis_) reducers.push_back(terms_in_order(g, order_));
  TermVec<K> cur = terms_in_order(f, order_);
  TermVec<K> result, scratch;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    Monomial m = cur[pos].monomial;
    int k = -1;
    for (std::size_t i = 0; i < leading_.size(); ++i) {
      if (leading_[i].divides(m)) {
        k = static_cast<int>(i);
        break;
      }
    }
    if (k < 0) {
      result.push_back(cur[pos++]);
      continue;
    }
    const TermVec<K>& g = reducers[k];
    Monomial t = leading_[k].quotient_of(m);
    K c = cur[pos].coefficient * g.front().coefficient.inverse();
    scratch.clear();
    std::size_t i = pos + 1, j = 1;
    while (i < cur.size() || j < g.size()) {
      if (j == g.size()) {
        scratch.push_back(cur[i++]);
        continue;
      }
      Monomial mb = g[j].monomial * t;
      if (i == cur.size()) {
        scratch.push_back({mb, -(c * g[j].coefficient)});
        ++j;
        continue;
      }
      int cmp = order_.compare(cur[i].monomial, mb);
      if (cmp > 0) {
        scratch.push_back(cur[i++]);
      } else if (cmp < 0) {
        scratch.push_back({mb, -(c * g[j].coefficient)});
        ++j;
      } else {
        K v = cur[i].coefficient - c * g[j].coefficient;
        if (!v.is_zero()) scratch.push_back({mb, v});
        ++i;
        ++j;
      }
    }
    cur.swap(scratch);
    pos = 0;
  }
  return Polynomial<K>::from_terms(nvars_, field_, std::move(result));
}

template <FieldElement K>
GroebnerBasis<K> groebner_basis(const Ideal<K>& ideal, const MonomialOrder& order,
                                const GroebnerOptions& options) {
  Engine<K> engine(ideal.nvars(), ideal.field(), order, options, ideal.homogeneous());
  return engine.run(ideal.generators());
}

int krull_dimension(int nvars, const std::vector<Monomial>& leading, bool unit) {
  if (unit) return -1;
  std::vector<unsigned> supports;
  for (Monomial m : leading) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  int best = 0;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](unsigned sup) { return (sup & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

template <FieldElement K>
int krull_dimension(const Ideal<K>& ideal, const GroebnerOptions& options) {
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex(), options);
  return krull_dimension(ideal.nvars(), gb.leading_monomials(), gb.is_unit());
}

template <FieldElement K>
int projective_dimension(const Ideal<K>& ideal, const GroebnerOptions& options) {
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (!ideal.generators()[i].is_homogeneous()) {
      throw DomainError("projective_dimension: generator " + std::to_string(i) +
                        " is not homogeneous");
    }
  }
  // The affine cone always contains the origin; dimension 0 means empty.
  return krull_dimension(ideal, options) - 1;
}

std::int64_t hilbert_function(int nvars, const std::vector<Monomial>& leading, int t) {
  if (t < 0) throw DomainError("hilbert_function: negative degree");
  for (Monomial m : leading) {
    if (m.is_one()) return 0;
  }
  if (nvars == 0) return t == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::array<int, kMaxVars> e{};
  // Enumerate degree-t monomials by recursion on the variable index.
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == nvars - 1) {
      e[var] = rest;
      Monomial m = Monomial::from_exponents(std::span<const int>(e.data(), nvars));
      bool standard = std::none_of(leading.begin(), leading.end(),
                                   [m](Monomial l) { return l.divides(m); });
      if (standard) ++count;
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      e[var] = k;
      self(self, var + 1, rest - k);
    }
  };
  rec(rec, 0, t);
  return count;
}

template <FieldElement K>
std::int64_t hilbert_function(const Ideal<K>& ideal, int t, const GroebnerOptions& options) {
  if (t < 0) throw DomainError("hilbert_function: negative degree");
  return hilbert_values(ideal, t, options).back();
}

template <FieldElement K>
std::vector<std::int64_t> hilbert_values(const Ideal<K>& ideal, int t_max,
                                         const GroebnerOptions& options) {
  if (t_max < 0) throw DomainError("hilbert_function: negative degree");
  if (!ideal.homogeneous()) throw DomainError("hilbert_function: ideal is not homogeneous");
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex(), options);
  std::vector<std::int64_t> out;
  for (int t = 0; t <= t_max; ++t) {
    out.push_back(hilbert_function(ideal.nvars(), gb.leading_monomials(), t));
  }
  return out;
}

template <FieldElement K>
RegularSequenceResult is_regular_sequence(const std::vector<Polynomial<K>>& gens,
                                          const GroebnerOptions& options) {
  if (gens.empty()) return {true, 0};
  const int nvars = gens.front().nvars();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) {
      throw DomainError("is_regular_sequence: generator " + std::to_string(i) + " is zero");
    }
    if (!gens[i].is_homogeneous() || gens[i].degree() < 1) {
      throw DomainError("is_regular_sequence: generator " + std::to_string(i) +
                        " is not a homogeneous form of positive degree");
    }
    if (gens[i].nvars() != nvars) throw DomainError("is_regular_sequence: mixed rings");
  }
  Ideal<K> prefix(nvars, gens.front().field());
  int previous = nvars;
  RegularSequenceResult result;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    prefix.add(gens[i]);
    int dim = krull_dimension(prefix, options);
    if (dim != previous - 1) return result;
    previous = dim;
    result.alpha = static_cast<int>(i) + 1;
  }
  result.regular = true;
  return result;
}

template <FieldElement K>
Ideal<K> eliminate(const Ideal<K>& ideal, int k, const GroebnerOptions& options) {
  if (k < 0 || k > ideal.nvars()) throw DomainError("eliminate: block size out of range");
  auto gb = groebner_basis(ideal, MonomialOrder::elimination(k), options);
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) mask |= 0xffull << (8 * i);
  Ideal<K> out(ideal.nvars(), ideal.field());
  for (std::size_t i = 0; i < gb.basis().size(); ++i) {
    if ((gb.leading_monomials()[i].packed() & mask) == 0) out.add(gb.basis()[i]);
  }
  return out;
}

std::vector<std::int64_t> complete_intersection_series(int nvars, const std::vector<int>& degrees,
                                                       int t_max) {
  std::vector<std::int64_t> num(t_max + 1, 0);
  num[0] = 1;
  for (int d : degrees) {
    for (int t = t_max; t >= d; --t) num[t] -= num[t - d];
  }
  // Multiply by (1 - s)^{-nvars}: coefficient of s^j is C(nvars - 1 + j, j).
  std::vector<std::int64_t> out(t_max + 1, 0);
  for (int t = 0; t <= t_max; ++t) {
    for (int j = 0; j <= t; ++j) out[t] += num[t - j] * binomial(nvars - 1 + j, j);
  }
  return out;
}

#define HICONE_INSTANTIATE(K)                                                                   \
  template class GroebnerBasis<K>;                                                              \
  template GroebnerBasis<K> groebner_basis(const Ideal<K>&, const MonomialOrder&,               \
                                           const GroebnerOptions&);                             \
  template Monomial leading_monomial(const Polynomial<K>&, const MonomialOrder&);               \
  template int krull_dimension(const Ideal<K>&, const GroebnerOptions&);                        \
  template int projective_dimension(const Ideal<K>&, const GroebnerOptions&);                   \
  template std::int64_t hilbert_function(const Ideal<K>&, int, const GroebnerOptions&);         \
  template std::vector<std::int64_t> hilbert_values(const Ideal<K>&, int,                       \
                                                    const GroebnerOptions&);                    \
  template RegularSequenceResult is_regular_sequence(const std::vector<Polynomial<K>>&,         \
                                                     const GroebnerOptions&);                   \
  template Ideal<K> eliminate(const Ideal<K>&, int, const GroebnerOptions&);

HICONE_INSTANTIATE(Fp)
HICONE_INSTANTIATE(Rational)

#undef HICONE_INSTANTIATE

}  // namespace hicone
