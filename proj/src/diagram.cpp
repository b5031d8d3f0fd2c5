#include "nilreal/diagram.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace nilreal {

Partition::Partition(std::vector<Part> parts) {
  std::map<int, int, std::greater<>> merged;
  for (const auto& part : parts) {
    if (part.d < 1 || part.t < 1) throw std::invalid_argument("partition parts need d >= 1 and t >= 1");
    merged[part.d] += part.t;
  }
  for (const auto& [d, t] : merged) parts_.push_back({d, t});
}

Partition Partition::from_rows(const std::vector<int>& rows) {
  std::vector<Part> parts;
  for (int r : rows) parts.push_back({r, 1});
  return Partition(parts);
}

int Partition::total() const {
  int n = 0;
  for (const auto& part : parts_) n += part.d * part.t;
  return n;
}

int Partition::multiplicity(int d) const {
  for (const auto& part : parts_)
    if (part.d == d) return part.t;
  return 0;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i].d);
    if (parts_[i].t > 1) s += "^" + std::to_string(parts_[i].t);
  }
  return s + "]";
}

PartClasses part_classes(const Partition& p) {
  PartClasses c;
  for (const auto& part : p.parts()) {
    int d = part.d;
    c.N.insert(d);
    if (d % 2 == 0) {
      c.E.insert(d);
      if (d % 4 == 2) c.E2.insert(d);
    } else {
      c.O.insert(d);
      (d % 4 == 1 ? c.O1 : c.O3).insert(d);
    }
  }
  return c;
}

PartitionPredicates partition_predicates(const Partition& p) {
  PartitionPredicates r;
  bool all_even = true, all_t_even = true, odd_t_even = true, even_t_even = true;
  int e2_total = 0;
  for (const auto& part : p.parts()) {
    bool t_even = part.t % 2 == 0;
    all_t_even = all_t_even && t_even;
    if (part.d % 2 == 0) {
      even_t_even = even_t_even && t_even;
      if (part.d % 4 == 2) e2_total += part.t;
    } else {
      all_even = false;
      odd_t_even = odd_t_even && t_even;
    }
  }
  r.in_Peven = all_even;
  r.in_Pveven = all_even && all_t_even;
  r.in_P1 = even_t_even;
  r.in_Pm1 = odd_t_even;
  r.in_Ptilde_e = r.in_Peven && !r.in_Pveven && e2_total % 2 == 1;
  return r;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_rows(cur));
    return;
  }
  for (int d = std::min(remaining, max_part); d >= 1; --d) {
    cur.push_back(d);
    partitions_rec(remaining - d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

SignedYoungDiagram::SignedYoungDiagram(std::vector<SignedPart> rows) {
  std::sort(rows.begin(), rows.end(), [](const SignedPart& a, const SignedPart& b) { return a.d > b.d; });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.d < 1 || r.t < 1 || r.p < 0 || r.q < 0 || r.p + r.q != r.t)
      throw std::invalid_argument("invalid signed row " + std::to_string(r.d));
    if (i && rows[i - 1].d == r.d) throw std::invalid_argument("repeated part size in signed diagram");
  }
  rows_ = std::move(rows);
}

SignedYoungDiagram SignedYoungDiagram::unsigned_from(const Partition& p) {
  std::vector<SignedPart> rows;
  for (const auto& part : p.parts()) rows.push_back({part.d, part.t, part.t, 0});
  return SignedYoungDiagram(rows);
}

Partition SignedYoungDiagram::partition() const {
  std::vector<Part> parts;
  for (const auto& r : rows_) parts.push_back({r.d, r.t});
  return Partition(parts);
}

int SignedYoungDiagram::total() const {
  int n = 0;
  for (const auto& r : rows_) n += r.d * r.t;
  return n;
}

const SignedPart& SignedYoungDiagram::row(int d) const {
  for (const auto& r : rows_)
    if (r.d == d) return r;
  throw std::out_of_range("diagram has no part of size " + std::to_string(d));
}

std::string SignedYoungDiagram::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    if (!s.empty()) s += "+";
    s += std::to_string(r.d) + "(" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
  }
  return s;
}

SignedYoungDiagram parse_diagram(const std::string& text) {
  static const std::regex segment(R"(\s*(\d+)(?:\^(\d+))?\((\d+),(\d+)\)\s*)");
  std::vector<SignedPart> rows;
  if (!text.empty() && (text.back() == '+' || text.front() == '+'))
    throw std::invalid_argument("dangling '+' in diagram '" + text + "'");
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    std::smatch m;
    if (!std::regex_match(piece, m, segment)) throw std::invalid_argument("malformed diagram segment '" + piece + "'");
    SignedPart r;
    r.d = std::stoi(m[1]);
    r.p = std::stoi(m[3]);
    r.q = std::stoi(m[4]);
    r.t = r.p + r.q;
    if (m[2].matched && std::stoi(m[2]) != r.t)
      throw std::invalid_argument("multiplicity does not match sign counts in '" + piece + "'");
    rows.push_back(r);
  }
  if (rows.empty()) throw std::invalid_argument("empty diagram");
  return SignedYoungDiagram(rows);
}

int so_witness_component_parity(const SignedYoungDiagram& dg) {
  int count = 0;
  for (const auto& row : dg.rows()) {
    if (row.d % 8 == 3 || row.d % 8 == 5) count += row.t;
    if (row.d % 4 == 2) count += row.t / 2;
  }
  return count % 2;
}

std::pair<int, int> diagram_signature(const SignedYoungDiagram& dg) {
  int P = 0, Q = 0;
  for (const auto& r : dg.rows()) {
    int d = r.d;
    if (d % 2 == 0) {
      P += r.t * d / 2;
      Q += r.t * d / 2;
      continue;
    }
    // A row starting with +1: (d+1)/2 plus signs if d = 1 mod 4, (d-1)/2 if d = 3 mod 4.
    int plus_if_plus = d % 4 == 1 ? (d + 1) / 2 : (d - 1) / 2;
    P += r.p * plus_if_plus + r.q * (d - plus_if_plus);
    Q += r.p * (d - plus_if_plus) + r.q * plus_if_plus;
  }
  return {P, Q};
}

bool FamilySpec::has_signature() const {
  return family == Family::SU_pq || family == Family::SO_pq || family == Family::SO_pq_identity ||
         family == Family::Sp_pq;
}

std::string FamilySpec::to_string() const {
  std::string name = family_name(family);
  if (has_signature()) return name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return name + "[dim " + std::to_string(dim) + "]";
}

RowSigns row_sign_rule(Family f, int d) {
  bool odd = d % 2 == 1;
  switch (f) {
    case Family::SU_pq:
      return RowSigns::free;
    case Family::SO_pq:
    case Family::SO_pq_identity:
      return odd ? RowSigns::free : RowSigns::balanced;
    case Family::SOstar:
    case Family::Sp_nR:
      return odd ? RowSigns::all_plus : RowSigns::free;
    case Family::Sp_pq:
      return odd ? RowSigns::free : RowSigns::all_plus;
    default:
      return RowSigns::all_plus;
  }
}

bool validate_diagram(const FamilySpec& fam, const SignedYoungDiagram& dg) {
  if (dg.rows().empty() || dg.total() != fam.dim) return false;
  PartitionPredicates pr = partition_predicates(dg.partition());
  switch (fam.family) {
    case Family::SO_C:
    case Family::O_C:
    case Family::SO_pq:
    case Family::SO_pq_identity:
      if (!pr.in_P1) return false;
      break;
    case Family::Sp_C:
    case Family::Sp_nR:
      if (!pr.in_Pm1) return false;
      break;
    default:
      break;
  }
  switch (fam.family) {
    case Family::SL_R:
    case Family::SL_C:
    case Family::SL_H:
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
    case Family::SO_C:
    case Family::O_C:
    case Family::Sp_C:
      return true;  // signs carry no information
    default:
      break;
  }
  for (const auto& r : dg.rows()) {
    switch (row_sign_rule(fam.family, r.d)) {
      case RowSigns::free:
        break;
      case RowSigns::all_plus:
        if (r.q != 0) return false;
        break;
      case RowSigns::balanced:
        if (r.p != r.q) return false;
        break;
    }
  }
  if (fam.has_signature()) {
    auto [P, Q] = diagram_signature(dg);
    if (P != fam.p || Q != fam.q) return false;
  }
  return true;
}

SignedYoungDiagram canonicalize(Family f, const SignedYoungDiagram& dg) {
  std::vector<SignedPart> rows = dg.rows();
  for (auto& r : rows) {
    switch (row_sign_rule(f, r.d)) {
      case RowSigns::free:
        break;
      case RowSigns::all_plus:
        r.p = r.t;
        r.q = 0;
        break;
      case RowSigns::balanced:
        if (r.t % 2) throw std::invalid_argument("odd multiplicity cannot be balanced");
        r.p = r.q = r.t / 2;
        break;
    }
  }
  return SignedYoungDiagram(rows);
}

namespace {

void signs_rec(const FamilySpec& fam, const std::vector<Part>& parts, std::size_t idx,
               std::vector<SignedPart>& cur, std::vector<SignedYoungDiagram>& out) {
  if (idx == parts.size()) {
    SignedYoungDiagram dg(cur);
    if (validate_diagram(fam, dg)) out.push_back(dg);
    return;
  }
  const Part& part = parts[idx];
  std::vector<int> choices;
  switch (row_sign_rule(fam.family, part.d)) {
    case RowSigns::free:
      for (int p = part.t; p >= 0; --p) choices.push_back(p);
      break;
    case RowSigns::all_plus:
      choices.push_back(part.t);
      break;
    case RowSigns::balanced:
      if (part.t % 2) return;
      choices.push_back(part.t / 2);
      break;
  }
  for (int p : choices) {
    cur.push_back({part.d, part.t, p, part.t - p});
    signs_rec(fam, parts, idx + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SignedYoungDiagram> enumerate_diagrams(const FamilySpec& fam) {
  if (fam.dim < 1) throw std::invalid_argument("enumerate_diagrams needs size >= 1");
  std::vector<SignedYoungDiagram> out;
  for (const auto& part : partitions_of(fam.dim)) {
    std::vector<SignedPart> cur;
    signs_rec(fam, part.parts(), 0, cur, out);
  }
  return out;
}

}  // namespace nilreal
