#include "fqc/typealg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

namespace fqc::typealg {

namespace {

using Parts = std::vector<int>;  // weakly decreasing
using Pair = std::pair<Matrix, Matrix>;

// Nonempty sub-multisets of p, largest total first.  With `keep_first`
// only those containing p[0].
std::vector<Parts> sub_multisets(const Parts& p, bool keep_first) {
  std::vector<std::pair<int, int>> vc;  // value, count
  for (int x : p) {
    if (!vc.empty() && vc.back().first == x)
      ++vc.back().second;
    else
      vc.emplace_back(x, 1);
  }
  std::vector<Parts> out;
  Parts cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == vc.size()) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    const int lo = keep_first && i == 0 ? 1 : 0;
    for (int c = vc[i].second; c >= lo; --c) {
      for (int k = 0; k < c; ++k) cur.push_back(vc[i].first);
      self(self, i + 1);
      cur.resize(cur.size() - c);
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const Parts& a, const Parts& b) {
    return std::accumulate(a.begin(), a.end(), 0) > std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

Parts minus(const Parts& p, const Parts& sub) {
  Parts r(p);
  for (int x : sub) r.erase(std::find(r.begin(), r.end(), x));
  return r;
}

int total(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

// All multiset partitions of p, each a list of weakly decreasing blocks.
void block_splits(const Parts& p, std::vector<Parts>& acc, std::vector<std::vector<Parts>>& out) {
  if (p.empty()) {
    out.push_back(acc);
    return;
  }
  for (const auto& s : sub_multisets(p, true)) {
    acc.push_back(s);
    block_splits(minus(p, s), acc, out);
    acc.pop_back();
  }
}

Elem root_in(const Field& big, const Field& F, const Poly& f) {
  const Embedding& emb = embedding(F, big);
  std::vector<Elem> c;
  for (Elem x : f.coeffs()) c.push_back(emb(x));
  for (Elem x = 0; x < big.q(); ++x) {
    Elem v = 0;
    for (size_t i = c.size(); i-- > 0;) v = big.add(big.mul(v, x), c[i]);
    if (v == 0) return x;
  }
  throw InternalError("no root of " + poly::format(f) + " in " + big.name());
}

bool verify(const Pair& w, const ClassType& S, const ClassType& T) {
  return mat::commutes(w.first, w.second) && mat::class_type(w.first) == S &&
         mat::class_type(w.second) == T;
}

// The primary question behind c^λ vs d^μ.
struct Reduction {
  bool divisible = false;
  int l = 1;
  Partition lam, mu;
};

Reduction reduce(int c, const Partition& lam, int d, const Partition& mu) {
  Reduction r;
  const int h = std::gcd(c, d);
  r.l = c / h * d;
  if (!divisible(lam, d / h) || !divisible(mu, c / h)) return r;
  r.divisible = true;
  r.lam = divide(lam, d / h);
  r.mu = divide(mu, c / h);
  return r;
}

// Nilpotent decision over F_{q^l}, or Unknown when that field is too large.
Verdict nil_decide(const Reduction& r, const Field& F, const nil::DecideOptions& opts, Field& big) {
  const std::uint64_t size = [&] {
    std::uint64_t s = 1;
    for (int i = 0; i < F.a() * r.l; ++i) {
      s *= static_cast<std::uint64_t>(F.p());
      if (s > kMaxFieldSize) break;
    }
    return s;
  }();
  if (size > kMaxFieldSize) return {Status::Unknown, "field-too-large", std::nullopt, 0};
  big = Field::make(F.p(), F.a() * r.l);
  return nil::decide(r.lam, r.mu, big, opts);
}

// Base-field witness with cycle types f^λ and g^μ from a nilpotent witness
// over big: scalar shift by roots, then the regular embedding.
Pair primary_witness(const Field& F, const Field& big, const Poly& f, const Poly& g,
                     const Pair& nilw) {
  const Elem al = root_in(big, F, f), be = root_in(big, F, g);
  const Matrix X = mat::add(nilw.first, Matrix::scalar(big, nilw.first.n(), al));
  const Matrix Y = mat::add(nilw.second, Matrix::scalar(big, nilw.second.n(), be));
  return {mat::regular_embed(X, F), mat::regular_embed(Y, F)};
}

struct Key {
  int c;
  Parts lam;
  int d;
  Parts mu;
  bool operator<(const Key& o) const {
    return std::tie(c, lam, d, mu) < std::tie(o.c, o.lam, o.d, o.mu);
  }
};

struct Cached {
  Verdict v;  // nilpotent verdict over big
  Field big;
  bool divisible = false;
};

class Matcher {
 public:
  Matcher(const ClassType& S, const ClassType& T, const Field& F, const nil::DecideOptions& opts)
      : F_(F), opts_(opts) {
    for (const auto& c : S.components()) {
      sdeg_.push_back(c.degree);
      srem_.push_back(c.partition.parts());
    }
    for (const auto& c : T.components()) {
      tdeg_.push_back(c.degree);
      trem_.push_back(c.partition.parts());
    }
  }

  struct Match {
    int i;
    Parts a;
    int j;
    Parts b;
  };

  bool run() { return search(); }
  bool saw_unknown() const { return unknown_; }
  std::uint64_t spent() const { return spent_; }
  const std::vector<Match>& matches() const { return path_; }

  const Cached& primary(int c, const Parts& lam, int d, const Parts& mu) {
    Key k{c, lam, d, mu};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Cached e;
    const Reduction r = reduce(c, Partition(lam), d, Partition(mu));
    e.divisible = r.divisible;
    if (r.divisible) {
      e.v = nil_decide(r, F_, opts_, e.big);
    } else {
      e.v = {Status::No, "divisibility", std::nullopt, 0};
    }
    spent_ += e.v.spent;
    return cache_.emplace(k, std::move(e)).first->second;
  }

 private:
  std::string state() const {
    std::string s;
    for (const auto& p : srem_) s += Partition(p).str();
    s += '|';
    for (const auto& p : trem_) s += Partition(p).str();
    return s;
  }

  bool search() {
    size_t i = 0;
    while (i < srem_.size() && srem_[i].empty()) ++i;
    if (i == srem_.size()) return true;
    const std::string st = state();
    if (dead_.count(st)) return false;
    const Parts si = srem_[i];
    for (const auto& a : sub_multisets(si, true)) {
      const int dim = sdeg_[i] * total(a);
      for (size_t j = 0; j < trem_.size(); ++j) {
        if (trem_[j].empty() || dim % tdeg_[j] != 0) continue;
        const int want = dim / tdeg_[j];
        const Parts tj = trem_[j];
        for (const auto& b : sub_multisets(tj, false)) {
          if (total(b) != want) continue;
          const Cached& e = primary(sdeg_[i], a, tdeg_[j], b);
          if (e.v.status == Status::Unknown) unknown_ = true;
          if (e.v.status != Status::Yes) continue;
          srem_[i] = minus(si, a);
          trem_[j] = minus(tj, b);
          path_.push_back({static_cast<int>(i), a, static_cast<int>(j), b});
          if (search()) return true;
          path_.pop_back();
          srem_[i] = si;
          trem_[j] = tj;
        }
      }
    }
    dead_.insert(st);
    return false;
  }

  Field F_;
  nil::DecideOptions opts_;
  std::vector<int> sdeg_, tdeg_;
  std::vector<Parts> srem_, trem_;
  std::vector<Match> path_;
  std::set<std::string> dead_;
  std::map<Key, Cached> cache_;
  bool unknown_ = false;
  std::uint64_t spent_ = 0;
};

// Distinct least-encoded irreducibles for the components of T.
std::vector<Poly> choose_polys(const ClassType& T, const Field& F) {
  std::map<int, std::vector<Poly>> pool;
  std::map<int, size_t> used;
  for (const auto& c : T.components()) {
    const auto need = static_cast<size_t>(
        std::count_if(T.components().begin(), T.components().end(),
                      [&](const TypeComponent& o) { return o.degree == c.degree; }));
    if (!pool.count(c.degree)) pool[c.degree] = poly::enumerate_irreducibles(F, c.degree, need);
  }
  std::vector<Poly> out;
  for (const auto& c : T.components()) out.push_back(pool[c.degree].at(used[c.degree]++));
  return out;
}

}  // namespace

bool representable(const ClassType& T, const Field& F) {
  std::map<int, std::uint64_t> per;
  for (const auto& c : T.components()) ++per[c.degree];
  for (const auto& [d, k] : per)
    if (k > poly::count_irreducibles(F.q(), d)) return false;
  return true;
}

std::vector<Separation> separations(const ClassType& T) {
  const auto& comps = T.components();
  std::vector<std::vector<std::vector<Parts>>> per;
  for (const auto& c : comps) {
    std::vector<std::vector<Parts>> splits;
    std::vector<Parts> acc;
    block_splits(c.partition.parts(), acc, splits);
    per.push_back(std::move(splits));
  }
  std::vector<Separation> out;
  std::set<std::string> seen;
  std::vector<size_t> idx(comps.size(), 0);
  while (true) {
    std::vector<std::pair<TypeComponent, int>> parts;
    for (size_t i = 0; i < comps.size(); ++i)
      for (const auto& blk : per[i][idx[i]])
        parts.push_back({TypeComponent{comps[i].degree, Partition(blk)}, static_cast<int>(i)});
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
      if (x.first.degree != y.first.degree) return x.first.degree < y.first.degree;
      return y.first.partition < x.first.partition;
    });
    Separation s;
    std::vector<TypeComponent> tc;
    for (const auto& [c, o] : parts) {
      tc.push_back(c);
      s.provenance.push_back(o);
    }
    s.derived = ClassType(tc);
    if (seen.insert(s.derived.str()).second) out.push_back(std::move(s));
    size_t i = 0;
    for (; i < comps.size(); ++i) {
      if (++idx[i] < per[i].size()) break;
      idx[i] = 0;
    }
    if (i == comps.size()) break;
  }
  return out;
}

Verdict primary_commute(const TypeComponent& S, const TypeComponent& T, const Field& F,
                        const nil::DecideOptions& opts) {
  if (S.dim() != T.dim()) return {Status::No, "dimension", std::nullopt, 0};
  const Reduction r = reduce(S.degree, S.partition, T.degree, T.partition);
  if (!r.divisible) return {Status::No, "divisibility", std::nullopt, 0};
  Field big;
  Verdict v = nil_decide(r, F, opts, big);
  if (v.status != Status::Yes) return v;
  const Poly f = poly::enumerate_irreducibles(F, S.degree, 1).at(0);
  const Poly g = poly::enumerate_irreducibles(F, T.degree, 1).at(0);
  v.witness = primary_witness(F, big, f, g, *v.witness);
  if (!verify(*v.witness, ClassType({S}), ClassType({T})))
    throw InternalError("primary witness failed to verify");
  return v;
}

Verdict types_commute(const ClassType& S, const ClassType& T, const Field& F,
                      const nil::DecideOptions& opts) {
  if (!representable(S, F)) throw NotRepresentable(S.str() + " over " + F.name());
  if (!representable(T, F)) throw NotRepresentable(T.str() + " over " + F.name());
  if (S.dim() != T.dim()) throw SizeMismatch(S.str() + " vs " + T.str());
  if (S.components().empty()) throw EmptyInput("empty type");
  Matcher M(S, T, F, opts);
  if (!M.run()) {
    if (M.saw_unknown()) return {Status::Unknown, "budget", std::nullopt, M.spent()};
    return {Status::No, "separation-exhaustion", std::nullopt, M.spent()};
  }
  const auto fs = choose_polys(S, F);
  const auto gs = choose_polys(T, F);
  std::vector<Matrix> xs, ys;
  for (const auto& m : M.matches()) {
    const TypeComponent& sc = S.components()[m.i];
    const TypeComponent& tc = T.components()[m.j];
    const Cached& e = M.primary(sc.degree, m.a, tc.degree, m.b);
    auto [X, Y] = primary_witness(F, e.big, fs[m.i], gs[m.j], *e.v.witness);
    xs.push_back(std::move(X));
    ys.push_back(std::move(Y));
  }
  Verdict v{Status::Yes, "componentwise", Pair{mat::direct_sum(xs), mat::direct_sum(ys)}, M.spent()};
  if (!verify(*v.witness, S, T)) throw InternalError("type witness failed to verify");
  return v;
}

Verdict classes_commute(const CycleType& C, const CycleType& D, const nil::DecideOptions& opts) {
  if (C.field() != D.field()) throw ShapeMismatch("cycle types over different fields");
  if (C.dim() != D.dim()) throw SizeMismatch(C.str() + " vs " + D.str());
  Verdict v = types_commute(C.class_type(), D.class_type(), C.field(), opts);
  if (v.status != Status::Yes) return v;
  auto& [X, Y] = *v.witness;
  const Matrix X2 = mat::eval(polynomial_map(X, C), X);
  const Matrix Y2 = mat::eval(polynomial_map(Y, D), Y);
  if (!mat::commutes(X2, Y2) || mat::cycle_type(X2) != C || mat::cycle_type(Y2) != D)
    throw InternalError("class witness failed to verify");
  v.witness = Pair{X2, Y2};
  return v;
}

Poly polynomial_map(const Matrix& X, const CycleType& target) {
  const Field& F = X.field();
  if (target.field() != F) throw TypeMismatch("target over a different field");
  const CycleType src = mat::cycle_type(X);
  if (src.class_type() != target.class_type())
    throw TypeMismatch(src.class_type().str() + " vs " + target.class_type().str());
  const auto& sc = src.components();
  std::vector<bool> used(sc.size(), false);
  std::vector<std::pair<Poly, Poly>> pieces;
  for (const auto& tc : target.components()) {
    size_t i = 0;
    while (used[i] || sc[i].poly.deg() != tc.poly.deg() || sc[i].partition != tc.partition) ++i;
    used[i] = true;
    const Poly& f = sc[i].poly;
    const Poly& g = tc.poly;
    const Poly M = poly::pow(F, f, static_cast<unsigned>(tc.partition.largest()));
    // Semisimple part s(x): f(s) = 0 mod M and s = x mod f.
    Poly s = poly::mod(F, Poly::x(), M);
    const Poly df = poly::derivative(F, f);
    for (int it = 0; it < 64; ++it) {
      const Poly fs = poly::mod(F, poly::compose(F, f, s), M);
      if (fs.is_zero()) break;
      const Poly step = poly::mulmod(F, fs, poly::inverse_mod(F, poly::compose(F, df, s), M), M);
      s = poly::mod(F, poly::sub(F, s, step), M);
    }
    // G(alpha) = beta for roots alpha of f and beta of g.
    Poly G;
    const int d = f.deg();
    if (d == 1) {
      G = Poly::constant(F.neg(g[0]));
    } else {
      const Field big = Field::make(F.p(), F.a() * d);
      const Elem al = root_in(big, F, f), be = root_in(big, F, g);
      const SubfieldBasis sb(big, F, al);
      G = Poly(sb.coords(be));
    }
    const Poly nilp = poly::sub(F, Poly::x(), s);
    pieces.emplace_back(poly::mod(F, poly::add(F, poly::compose(F, G, s), nilp), M), M);
  }
  const Poly P = poly::crt_combine(F, pieces);
  if (mat::cycle_type(mat::eval(P, X)) != target) throw InternalError("polynomial map failed to verify");
  return P;
}

void write_witness(std::ostream& out, const Matrix& X, const Matrix& Y) {
  if (!mat::commutes(X, Y)) throw InternalError("witness does not commute");
  mat::write(out, X);
  mat::write(out, Y);
  out << "verified commute=yes typesmatch=yes\n";
}

}  // namespace fqc::typealg
