#include "fqc/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace fqc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParseError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("partition '" + text + "': missing ')'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition();
  size_t i = 0;
  while (true) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("partition '" + text + "': expected a number");
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 1000000) throw ParseError("partition '" + text + "': part too large");
    }
    if (v == 0) throw ParseError("partition '" + text + "': zero part");
    parts.push_back(static_cast<int>(v));
    if (i == s.size()) break;
    if (s[i] != ',') throw ParseError("partition '" + text + "': expected ','");
    ++i;
  }
  for (size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1])
      throw ParseError("partition '" + text + "': parts not weakly decreasing");
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> v(a.parts());
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::from_parts(std::move(v));
}

Partition times(int t, const Partition& l) {
  if (t < 0) throw NotDivisible("negative multiple");
  std::vector<int> v;
  for (int x : l.parts())
    for (int i = 0; i < t; ++i) v.push_back(x);
  return Partition(std::move(v));
}

bool divisible(const Partition& l, int t) {
  if (t <= 0) return false;
  const auto& p = l.parts();
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if ((j - i) % static_cast<size_t>(t) != 0) return false;
    i = j;
  }
  return true;
}

Partition divide(const Partition& l, int t) {
  if (!divisible(l, t))
    throw NotDivisible(l.str() + " is not " + std::to_string(t) + "-divisible");
  std::vector<int> v;
  for (size_t i = 0; i < l.parts().size(); i += static_cast<size_t>(t)) v.push_back(l.parts()[i]);
  return Partition(std::move(v));
}

Partition conjugate(const Partition& l) {
  std::vector<int> v;
  for (int j = 1; j <= l.largest(); ++j) {
    int c = 0;
    for (int x : l.parts())
      if (x >= j) ++c;
    v.push_back(c);
  }
  return Partition(std::move(v));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch(a.str() + " vs " + b.str());
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

bool is_almost_rectangular(const Partition& l) {
  return l.empty() || l.largest() - l.smallest() <= 1;
}

Partition almost_rectangular(int n, int k) {
  if (k <= 0 || n < k) throw InvalidDegree("no almost rectangular partition of " +
                                           std::to_string(n) + " with " + std::to_string(k) + " parts");
  const int h = n / k, r = n % k;
  std::vector<int> v(k, h);
  for (int i = 0; i < r; ++i) v[i] = h + 1;
  return Partition(std::move(v));
}

namespace {

// Multisets as counts indexed by part size.
using Counts = std::vector<int>;

Counts to_counts(const Partition& l) {
  Counts c(l.largest() + 1, 0);
  for (int x : l.parts()) ++c[x];
  return c;
}

int top(const Counts& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
    if (c[i]) return i;
  return 0;
}

// Almost rectangular sub-multisets of c with total s, as (h, #h, #(h-1)),
// fewest parts first.
std::vector<std::array<int, 3>> ar_pieces(const Counts& c, int s) {
  std::vector<std::array<int, 3>> out;
  const int mx = static_cast<int>(c.size()) - 1;
  for (int h = std::min(mx, s); h >= 1; --h) {
    if (!c[h]) continue;
    for (int i = 1; i <= c[h] && i * h <= s; ++i) {
      const int rest = s - i * h;
      if (rest == 0) {
        out.push_back({h, i, 0});
        continue;
      }
      if (h - 1 < 1 || rest % (h - 1) != 0) continue;
      const int j = rest / (h - 1);
      if (j <= c[h - 1]) out.push_back({h, i, j});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a[1] + a[2] < b[1] + b[2];
  });
  return out;
}

Partition piece(int h, int i, int j) {
  std::vector<int> v(i, h);
  v.insert(v.end(), j, h - 1);
  return Partition(std::move(v));
}

struct ArSearch {
  std::set<std::pair<Counts, Counts>> dead;
  std::vector<ArGroup> groups;

  bool run(Counts& a, Counts& b) {
    const int h = top(a);
    if (h == 0) return top(b) == 0;
    auto key = std::make_pair(a, b);
    if (dead.count(key)) return false;
    // The piece of a holding its largest remaining part.
    for (int i = 1; i <= a[h]; ++i) {
      const int maxj = h > 1 ? a[h - 1] : 0;
      for (int j = 0; j <= maxj; ++j) {
        const int s = i * h + j * (h - 1);
        for (const auto& [g, x, y] : ar_pieces(b, s)) {
          a[h] -= i;
          if (h > 1) a[h - 1] -= j;
          b[g] -= x;
          if (g > 1) b[g - 1] -= y;
          groups.push_back({s, piece(h, i, j), piece(g, x, y)});
          if (run(a, b)) return true;
          groups.pop_back();
          a[h] += i;
          if (h > 1) a[h - 1] += j;
          b[g] += x;
          if (g > 1) b[g - 1] += y;
        }
      }
    }
    dead.insert(std::move(key));
    return false;
  }
};

}  // namespace

std::optional<std::vector<ArGroup>> common_ar_groups(const Partition& m1, const Partition& m2) {
  if (m1.size() != m2.size()) throw SizeMismatch(m1.str() + " vs " + m2.str());
  Counts a = to_counts(m1), b = to_counts(m2);
  ArSearch s;
  if (!s.run(a, b)) return std::nullopt;
  std::stable_sort(s.groups.begin(), s.groups.end(),
                   [](const ArGroup& x, const ArGroup& y) { return x.size > y.size; });
  return s.groups;
}

std::optional<Partition> common_ar_source(const Partition& m1, const Partition& m2) {
  auto g = common_ar_groups(m1, m2);
  if (!g) return std::nullopt;
  std::vector<int> v;
  for (const auto& x : *g) v.push_back(x.size);
  return Partition::from_parts(std::move(v));
}

int part_size_invariant(const std::vector<Partition>& ls) {
  int g = 0;
  for (const auto& l : ls)
    for (int x : l.parts()) g = std::gcd(g, x);
  if (g == 0) throw EmptyInput("no parts");
  return g;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(rem, mx); x >= 1; --x) {
      cur.push_back(x);
      rec(rem - x, x);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

}  // namespace fqc
