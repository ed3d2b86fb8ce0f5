#include "fqc/types.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fqc {

namespace {

bool component_less(const TypeComponent& a, const TypeComponent& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return b.partition < a.partition;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits "head^(parts)" at the last "^(".
std::pair<std::string, Partition> split_component(const std::string& tok, const std::string& text) {
  const auto pos = tok.rfind("^(");
  if (pos == std::string::npos || pos == 0 || tok.back() != ')')
    throw ParseError("component '" + tok + "' in '" + text + "' is not of the form d^(parts)");
  Partition l = Partition::parse(tok.substr(pos + 1));
  if (l.empty()) throw ParseError("component '" + tok + "' has an empty partition");
  return {tok.substr(0, pos), l};
}

}  // namespace

ClassType::ClassType(std::vector<TypeComponent> comps) : comps_(std::move(comps)) {
  for (const auto& c : comps_) {
    if (c.degree < 1) throw InvalidDegree("component degree must be positive");
    if (c.partition.empty()) throw EmptyInput("component with empty partition");
  }
  std::sort(comps_.begin(), comps_.end(), component_less);
}

ClassType ClassType::parse(const std::string& text) {
  std::vector<TypeComponent> comps;
  for (const auto& tok : split_ws(text)) {
    auto [head, l] = split_component(tok, text);
    if (head.empty() || !std::all_of(head.begin(), head.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad degree '" + head + "' in '" + text + "'");
    if (head.size() > 6) throw ParseError("degree too large in '" + text + "'");
    const int d = std::stoi(head);
    if (d < 1) throw ParseError("degree must be positive in '" + text + "'");
    comps.push_back({d, l});
  }
  if (comps.empty()) throw ParseError("empty class type");
  return ClassType(std::move(comps));
}

int ClassType::dim() const {
  int n = 0;
  for (const auto& c : comps_) n += c.dim();
  return n;
}

std::string ClassType::str() const {
  std::string out;
  for (const auto& c : comps_) {
    if (!out.empty()) out += " ";
    out += std::to_string(c.degree) + "^" + c.partition.str();
  }
  return out;
}

bool ClassType::operator<(const ClassType& o) const {
  return std::lexicographical_compare(
      comps_.begin(), comps_.end(), o.comps_.begin(), o.comps_.end(),
      [](const TypeComponent& a, const TypeComponent& b) { return component_less(a, b); });
}

CycleType::CycleType(const Field& F, std::vector<CycleComponent> comps)
    : field_(F), comps_(std::move(comps)) {
  for (auto& c : comps_) {
    if (c.poly.deg() < 1 || !c.poly.is_monic())
      throw NotIrreducible(poly::format(c.poly) + " is not a monic polynomial of positive degree");
    if (!poly::is_irreducible(F, c.poly)) throw NotIrreducible(poly::format(c.poly));
    if (c.partition.empty()) throw EmptyInput("component with empty partition");
  }
  std::sort(comps_.begin(), comps_.end(), [](const CycleComponent& a, const CycleComponent& b) {
    return encoding_less(a.poly, b.poly);
  });
  for (size_t i = 1; i < comps_.size(); ++i)
    if (comps_[i].poly == comps_[i - 1].poly)
      throw ParseError("repeated polynomial " + poly::format(comps_[i].poly));
}

CycleType CycleType::parse(const Field& F, const std::string& text) {
  std::vector<CycleComponent> comps;
  for (const auto& tok : split_ws(text)) {
    auto [head, l] = split_component(tok, text);
    comps.push_back({poly::parse(F, head), l});
  }
  if (comps.empty()) throw ParseError("empty cycle type");
  return CycleType(F, std::move(comps));
}

int CycleType::dim() const {
  int n = 0;
  for (const auto& c : comps_) n += c.poly.deg() * c.partition.size();
  return n;
}

ClassType CycleType::class_type() const {
  std::vector<TypeComponent> v;
  for (const auto& c : comps_) v.push_back({c.poly.deg(), c.partition});
  return ClassType(std::move(v));
}

std::string CycleType::str() const {
  std::string out;
  for (const auto& c : comps_) {
    if (!out.empty()) out += " ";
    out += poly::format(c.poly) + "^" + c.partition.str();
  }
  return out;
}

}  // namespace fqc
