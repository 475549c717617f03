#include "sylow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace sylow::oracle {
namespace {

std::uint64_t upow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t perm_rank(const unsigned* perm, std::size_t n) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

// Generation-stamped membership marks, reused across closures.
class Marks {
 public:
  explicit Marks(std::size_t n) : stamp_(n, 0) {}
  void next() {
    if (++gen_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      gen_ = 1;
    }
  }
  bool test(std::size_t i) const { return stamp_[i] == gen_; }
  void set(std::size_t i) { stamp_[i] = gen_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t gen_ = 0;
};

struct Closure {
  std::vector<std::size_t> elements;
  Bitset reflections;
};

// BFS closure of the reflections at `gens`, via the right-multiplication table.
Closure close_reflections(const ConcreteGroup& g, const std::vector<std::uint32_t>& gens,
                          Marks& marks) {
  marks.next();
  Closure c;
  c.reflections = Bitset(g.reflection_indices().size());
  c.elements.push_back(0);
  marks.set(0);
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    auto x = c.elements[head];
    for (auto j : gens) {
      auto y = g.times_reflection(x, j);
      if (!marks.test(y)) {
        marks.set(y);
        c.elements.push_back(y);
      }
    }
  }
  for (auto x : c.elements) {
    auto pos = g.reflection_position(x);
    if (pos >= 0) c.reflections.set(static_cast<std::size_t>(pos));
  }
  return c;
}

Bitset conjugate_set(const ConcreteGroup& g, std::size_t by, const std::vector<std::uint32_t>& set) {
  Bitset out(g.reflection_indices().size());
  for (auto j : set) out.set(g.conjugate_reflection(by, j));
  return out;
}

// Orbit of a reflection set under conjugation by the reflections, which
// generate G.
std::vector<Bitset> conjugation_orbit(const ConcreteGroup& g, const Bitset& start) {
  std::vector<Bitset> orbit{start};
  std::unordered_set<Bitset, BitsetHash> seen{start};
  const auto r = g.reflection_indices().size();
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    auto idx = orbit[head].indices();
    for (std::size_t t = 0; t < r; ++t) {
      auto image = conjugate_set(g, t, idx);
      if (seen.insert(image).second) orbit.push_back(std::move(image));
    }
  }
  return orbit;
}

SubgroupClass make_class(std::vector<Bitset> orbit, std::size_t order) {
  auto best = std::min_element(orbit.begin(), orbit.end(),
                               [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
  std::iter_swap(orbit.begin(), best);
  return SubgroupClass{std::move(orbit), order};
}

}  // namespace

MonomialElement MonomialElement::identity(std::size_t n) {
  MonomialElement e;
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0U);
  e.phase.assign(n, 0);
  return e;
}

bool MonomialElement::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != i || phase[i] != 0) return false;
  }
  return true;
}

MonomialElement multiply(const MonomialElement& g, const MonomialElement& h, std::uint64_t m) {
  const auto n = g.rank();
  MonomialElement r;
  r.perm.resize(n);
  r.phase.resize(n);
  std::vector<unsigned> g_inv(n);
  for (std::size_t i = 0; i < n; ++i) g_inv[g.perm[i]] = static_cast<unsigned>(i);
  for (std::size_t i = 0; i < n; ++i) {
    r.perm[i] = g.perm[h.perm[i]];
    r.phase[i] = static_cast<unsigned>((g.phase[i] + h.phase[g_inv[i]]) % m);
  }
  return r;
}

MonomialElement inverse(const MonomialElement& g, std::uint64_t m) {
  const auto n = g.rank();
  MonomialElement r;
  r.perm.resize(n);
  r.phase.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm[g.perm[i]] = static_cast<unsigned>(i);
  for (std::size_t k = 0; k < n; ++k) {
    r.phase[k] = static_cast<unsigned>((m - g.phase[g.perm[k]] % m) % m);
  }
  return r;
}

bool is_member(const MonomialElement& g, std::uint64_t m, std::uint64_t p) {
  std::uint64_t sum = 0;
  for (auto t : g.phase) sum += t % m;
  return sum % p == 0;
}

FixedSpaceDescriptor fixed_space(const MonomialElement& g, std::uint64_t m) {
  const auto n = g.rank();
  FixedSpaceDescriptor d;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cycle;
    std::uint64_t sum = 0;
    for (auto i = start; !seen[i]; i = g.perm[i]) {
      seen[i] = true;
      cycle.push_back(static_cast<unsigned>(i));
      sum += g.phase[g.perm[i]];
    }
    if (sum % m != 0) continue;
    // v_{pi(i)} = v_i + theta(pi(i)), starting from exponent 0 at `start`,
    // which is the smallest coordinate of its cycle.
    std::map<unsigned, unsigned> exps;
    std::uint64_t e = 0;
    for (auto i : cycle) {
      exps[i] = static_cast<unsigned>(e % m);
      e += g.phase[g.perm[i]];
    }
    FixedVector v;
    for (auto [coord, ex] : exps) {
      v.support.push_back(coord);
      v.exponents.push_back(ex);
    }
    d.basis.push_back(std::move(v));
  }
  std::sort(d.basis.begin(), d.basis.end());
  return d;
}

bool fixes(const MonomialElement& h, const FixedVector& v, std::uint64_t m) {
  std::map<unsigned, unsigned> exps;
  for (std::size_t k = 0; k < v.support.size(); ++k) exps[v.support[k]] = v.exponents[k];
  for (auto [i, e] : exps) {
    auto target = h.perm[i];
    auto it = exps.find(target);
    if (it == exps.end()) return false;
    if ((e + h.phase[target]) % m != it->second % m) return false;
  }
  return true;
}

bool fixes(const MonomialElement& h, const FixedSpaceDescriptor& u, std::uint64_t m) {
  return std::all_of(u.basis.begin(), u.basis.end(),
                     [&](const FixedVector& v) { return fixes(h, v, m); });
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<std::uint32_t> Bitset::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      auto b = static_cast<std::size_t>(std::countr_zero(bits));
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool Bitset::lex_less(const Bitset& other) const {
  auto a = indices();
  auto b = other.indices();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ConcreteGroup ConcreteGroup::enumerate(std::uint64_t m, std::uint64_t p, std::uint64_t n,
                                       std::uint64_t order_cap) {
  if (m == 0 || p == 0 || n == 0 || m % p != 0) {
    throw InvalidArgument("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                          std::to_string(n) + ") needs p | m and n >= 1");
  }
  const BigInt order = ImprimitiveParams{m, p, n}.order();
  if (order > order_cap) {
    throw ResourceLimit("|G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                        std::to_string(n) + ")| = " + order.str() + " exceeds the cap " +
                        std::to_string(order_cap));
  }
  ConcreteGroup g;
  g.params_ = {m, p, n};
  const auto phase_codes = upow(m, n);
  g.index_by_code_.assign(factorial_u64(n) * phase_codes, -1);

  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<unsigned> phase(n);
  do {
    for (std::uint64_t code = 0; code < phase_codes; ++code) {
      std::uint64_t c = code;
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        phase[i] = static_cast<unsigned>(c % m);
        sum += phase[i];
        c /= m;
      }
      if (sum % p != 0) continue;
      g.index_by_code_[g.code_of(perm.data(), phase.data())] = static_cast<std::int32_t>(g.count_);
      g.perms_.insert(g.perms_.end(), perm.begin(), perm.end());
      g.phases_.insert(g.phases_.end(), phase.begin(), phase.end());
      ++g.count_;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  g.inverse_.resize(g.count_);
  g.refl_pos_.assign(g.count_, -1);
  for (std::size_t i = 0; i < g.count_; ++i) {
    auto e = g.element(i);
    g.inverse_[i] = *g.index_of(sylow::oracle::inverse(e, m));
    if (fixed_space(e, m).dimension() + 1 == n) {
      g.refl_pos_[i] = static_cast<std::int32_t>(g.reflections_.size());
      g.reflections_.push_back(i);
    }
  }
  const auto r = g.reflections_.size();
  g.times_refl_.resize(g.count_ * r);
  for (std::size_t i = 0; i < g.count_; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      g.times_refl_[i * r + j] = static_cast<std::uint32_t>(g.multiply(i, g.reflections_[j]));
    }
  }
  g.conj_refl_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto t = g.reflections_[i];
    for (std::size_t j = 0; j < r; ++j) {
      auto c = g.multiply(g.multiply(t, g.reflections_[j]), g.inverse_[t]);
      g.conj_refl_[i * r + j] = static_cast<std::uint32_t>(g.refl_pos_[c]);
    }
  }
  return g;
}

std::uint64_t ConcreteGroup::code_of(const unsigned* perm, const unsigned* phase) const {
  const auto n = params_.n;
  std::uint64_t code = 0;
  for (std::size_t i = n; i-- > 0;) code = code * params_.m + phase[i];
  return perm_rank(perm, n) * upow(params_.m, n) + code;
}

MonomialElement ConcreteGroup::element(std::size_t i) const {
  const auto n = params_.n;
  MonomialElement e;
  e.perm.assign(perms_.begin() + static_cast<std::ptrdiff_t>(i * n),
                perms_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  e.phase.assign(phases_.begin() + static_cast<std::ptrdiff_t>(i * n),
                 phases_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return e;
}

std::optional<std::size_t> ConcreteGroup::index_of(const MonomialElement& g) const {
  if (g.rank() != params_.n) return std::nullopt;
  std::vector<unsigned> phase(g.phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) phase[i] = static_cast<unsigned>(g.phase[i] % params_.m);
  auto idx = index_by_code_[code_of(g.perm.data(), phase.data())];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::size_t ConcreteGroup::multiply(std::size_t a, std::size_t b) const {
  const auto n = params_.n;
  const auto m = params_.m;
  const unsigned* pa = &perms_[a * n];
  const unsigned* pb = &perms_[b * n];
  const unsigned* ta = &phases_[a * n];
  const unsigned* tb = &phases_[b * n];
  unsigned perm[16];
  unsigned phase[16];
  unsigned a_inv[16];
  for (std::size_t i = 0; i < n; ++i) a_inv[pa[i]] = static_cast<unsigned>(i);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = pa[pb[i]];
    phase[i] = static_cast<unsigned>((ta[i] + tb[a_inv[i]]) % m);
  }
  return static_cast<std::size_t>(index_by_code_[code_of(perm, phase)]);
}

SubgroupHandle ConcreteGroup::generate(const std::vector<std::size_t>& generators) const {
  SubgroupHandle h{Bitset(count_), 0};
  std::vector<std::size_t> queue{0};
  h.elements.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : generators) {
      auto y = multiply(queue[head], s);
      if (!h.elements.test(y)) {
        h.elements.set(y);
        queue.push_back(y);
      }
    }
  }
  h.order = queue.size();
  return h;
}

SubgroupHandle ConcreteGroup::generate_by_reflections(
    const std::vector<std::uint32_t>& positions) const {
  Marks marks(count_);
  auto c = close_reflections(*this, positions, marks);
  SubgroupHandle h{Bitset(count_), c.elements.size()};
  for (auto x : c.elements) h.elements.set(x);
  return h;
}

Bitset ConcreteGroup::reflections_in(const SubgroupHandle& h) const {
  Bitset out(reflections_.size());
  for (std::size_t j = 0; j < reflections_.size(); ++j) {
    if (h.elements.test(reflections_[j])) out.set(j);
  }
  return out;
}

SubgroupHandle ConcreteGroup::whole() const {
  SubgroupHandle h{Bitset(count_), count_};
  for (std::size_t i = 0; i < count_; ++i) h.elements.set(i);
  return h;
}

std::vector<MonomialElement> reflections(const ConcreteGroup& g) {
  std::vector<MonomialElement> out;
  for (auto i : g.reflection_indices()) out.push_back(g.element(i));
  return out;
}

SubgroupHandle pointwise_stabilizer(const ConcreteGroup& g, const FixedSpaceDescriptor& u) {
  SubgroupHandle h{Bitset(g.order()), 0};
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (fixes(g.element(i), u, g.params().m)) {
      h.elements.set(i);
      ++h.order;
    }
  }
  return h;
}

std::vector<SubgroupClass> parabolic_classes(const ConcreteGroup& g) {
  const auto m = g.params().m;
  const auto r = g.reflection_indices().size();
  std::vector<MonomialElement> refl = reflections(g);

  std::set<FixedSpaceDescriptor> flats;
  for (std::size_t i = 0; i < g.order(); ++i) flats.insert(fixed_space(g.element(i), m));

  std::unordered_map<Bitset, FixedSpaceDescriptor, BitsetHash> flat_of;
  for (const auto& u : flats) {
    Bitset s(r);
    for (std::size_t j = 0; j < r; ++j) {
      if (fixes(refl[j], u, m)) s.set(j);
    }
    flat_of.emplace(std::move(s), u);
  }
  if (flat_of.size() != flats.size()) {
    throw std::logic_error("two flats of G(" + std::to_string(m) + "," +
                           std::to_string(g.params().p) + "," + std::to_string(g.params().n) +
                           ") share their reflections");
  }

  std::vector<SubgroupClass> classes;
  std::unordered_set<Bitset, BitsetHash> assigned;
  Marks marks(g.order());
  for (const auto& [set, flat] : flat_of) {
    if (assigned.count(set)) continue;
    auto orbit = conjugation_orbit(g, set);
    for (const auto& s : orbit) {
      if (!flat_of.count(s)) {
        throw std::logic_error("conjugate of a parabolic subgroup is not parabolic");
      }
      assigned.insert(s);
    }
    auto stab = pointwise_stabilizer(g, flat);
    auto closure = close_reflections(g, set.indices(), marks);
    if (closure.elements.size() != stab.order ||
        !std::all_of(closure.elements.begin(), closure.elements.end(),
                     [&](std::size_t x) { return stab.elements.test(x); })) {
      throw std::logic_error("parabolic subgroup not generated by its reflections");
    }
    classes.push_back(make_class(std::move(orbit), stab.order));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.member_order != b.member_order) return a.member_order < b.member_order;
    return a.representative().lex_less(b.representative());
  });
  return classes;
}

std::vector<SubgroupClass> reflection_subgroup_classes(const ConcreteGroup& g,
                                                       std::size_t subgroup_cap) {
  const auto r = g.reflection_indices().size();
  struct Seed {
    std::vector<std::uint32_t> gens;
    Bitset set;
  };
  std::vector<SubgroupClass> classes;
  std::vector<Seed> seeds;
  std::unordered_set<Bitset, BitsetHash> known;
  std::size_t total = 0;

  Bitset empty(r);
  known.insert(empty);
  classes.push_back(SubgroupClass{{empty}, 1});
  seeds.push_back({{}, empty});
  ++total;

  Marks marks(g.order());
  for (std::size_t c = 0; c < seeds.size(); ++c) {
    for (std::uint32_t j = 0; j < r; ++j) {
      if (seeds[c].set.test(j)) continue;
      auto gens = seeds[c].gens;
      gens.push_back(j);
      auto closure = close_reflections(g, gens, marks);
      if (known.count(closure.reflections)) continue;
      auto orbit = conjugation_orbit(g, closure.reflections);
      total += orbit.size();
      if (total > subgroup_cap) {
        throw ResourceLimit("more than " + std::to_string(subgroup_cap) +
                            " reflection subgroups");
      }
      for (const auto& s : orbit) known.insert(s);
      seeds.push_back({std::move(gens), closure.reflections});
      classes.push_back(make_class(std::move(orbit), closure.elements.size()));
    }
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.member_order != b.member_order) return a.member_order < b.member_order;
    return a.representative().lex_less(b.representative());
  });
  return classes;
}

std::vector<SubgroupClass> minimal_full_valuation(const std::vector<SubgroupClass>& classes,
                                                  std::uint64_t ell, std::uint64_t group_order) {
  valuation::require_prime(ell);
  const auto target = valuation::nu(ell, group_order);
  std::vector<const SubgroupClass*> full;
  for (const auto& c : classes) {
    if (valuation::nu(ell, static_cast<std::uint64_t>(c.member_order)) == target) {
      full.push_back(&c);
    }
  }
  std::vector<SubgroupClass> out;
  for (const auto* c : full) {
    bool minimal = true;
    for (const auto* d : full) {
      if (d == c || d->member_order >= c->member_order) continue;
      for (const auto& member : d->members) {
        if (member.is_subset_of(c->representative())) {
          minimal = false;
          break;
        }
      }
      if (!minimal) break;
    }
    if (minimal) out.push_back(*c);
  }
  return out;
}

SubgroupHandle representative_handle(const ConcreteGroup& g, const SubgroupClass& c) {
  return g.generate_by_reflections(c.representative().indices());
}

bool are_conjugate(const ConcreteGroup& g, const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.order != b.order) return false;
  if (a.elements == b.elements) return true;
  // A generating set of a: its reflections when they suffice, else all of a.
  auto refl = g.reflections_in(a).indices();
  std::vector<std::size_t> gens;
  if (g.generate_by_reflections(refl).order == a.order) {
    for (auto j : refl) gens.push_back(g.reflection_indices()[j]);
  } else {
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (a.elements.test(i)) gens.push_back(i);
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto xi = g.inverse(x);
    bool ok = true;
    for (auto s : gens) {
      if (!b.elements.test(g.multiply(g.multiply(x, s), xi))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

SubgroupHandle sylow_construct(const ConcreteGroup& g, std::uint64_t ell) {
  valuation::require_prime(ell);
  const auto [m, p, n] = g.params();
  if (g.order() % ell != 0) {
    throw NotADivisor(std::to_string(ell) + " does not divide the group order");
  }
  std::vector<MonomialElement> gens;
  const auto a = valuation::nu(ell, m);
  if (a > 0) {
    const auto s = m / upow(ell, a);
    const auto lb = upow(ell, valuation::nu(ell, p));
    for (std::size_t i = 1; i < n; ++i) {
      auto e = MonomialElement::identity(n);
      e.phase[0] = static_cast<unsigned>(s % m);
      e.phase[i] = static_cast<unsigned>((m - s % m) % m);
      gens.push_back(e);
    }
    auto e = MonomialElement::identity(n);
    e.phase[0] = static_cast<unsigned>((lb * s) % m);
    gens.push_back(e);
  }
  // Base-ell blocks, largest first; inside a block of size ell^k the j-th
  // generator rotates the ell sub-blocks of size ell^(j-1) of its first
  // ell^j points.
  auto digits = valuation::base_digits(ell, n);
  std::size_t offset = 0;
  for (std::size_t k = digits.digits.size(); k-- > 0;) {
    const auto size = upow(ell, k);
    for (std::uint64_t c = 0; c < digits.digits[k]; ++c) {
      for (std::size_t j = 1; j <= k; ++j) {
        const auto span = upow(ell, j);
        const auto step = upow(ell, j - 1);
        auto e = MonomialElement::identity(n);
        for (std::uint64_t x = 0; x < span; ++x) {
          e.perm[offset + x] = static_cast<unsigned>(offset + (x + step) % span);
        }
        gens.push_back(e);
      }
      offset += size;
    }
  }
  std::vector<std::size_t> idx;
  for (const auto& e : gens) {
    auto i = g.index_of(e);
    if (!i) throw std::logic_error("Sylow generator outside the group");
    idx.push_back(*i);
  }
  return g.generate(idx);
}

AugmentedPartition identify_class(const ConcreteGroup& g, const SubgroupHandle& h) {
  const auto [m, p, n] = g.params();
  auto refl = g.reflections_in(h).indices();
  if (g.generate_by_reflections(refl).elements != h.elements) {
    throw InvalidArgument("subgroup is not generated by its reflections");
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto j : refl) {
    auto e = g.element(g.reflection_indices()[j]);
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      if (e.perm[i] == i && e.phase[i] == 0) continue;
      if (!first) {
        first = i;
      } else {
        parent[find(i)] = find(*first);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);

  std::vector<MonomialElement> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (h.elements.test(i)) members.push_back(g.element(i));
  }
  std::vector<FeasibleTriple> triples;
  for (const auto& [root, block] : blocks) {
    std::vector<bool> inside(n, false);
    for (auto i : block) inside[i] = true;
    std::uint64_t local_order = 0;
    std::uint64_t phase_gcd = m;
    for (const auto& e : members) {
      bool local = true;
      for (std::size_t i = 0; i < n && local; ++i) {
        if (!inside[i] && (e.perm[i] != i || e.phase[i] != 0)) local = false;
      }
      if (!local) continue;
      ++local_order;
      bool diagonal = true;
      for (auto i : block) diagonal = diagonal && e.perm[i] == i;
      if (diagonal) {
        for (auto i : block) phase_gcd = std::gcd(phase_gcd, std::uint64_t{e.phase[i]});
      }
    }
    const std::uint64_t nb = block.size();
    if (nb == 1) {
      triples.push_back({local_order, 1, 1});
      continue;
    }
    const auto mb = m / phase_gcd;
    const auto full = upow(mb, nb) * factorial_u64(nb);
    triples.push_back({mb, full / local_order, nb});
  }
  return AugmentedPartition::make(std::move(triples), g.params());
}

}  // namespace sylow::oracle
