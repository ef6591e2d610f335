#include <sstream>

#include <json.hpp>

#include "liearr/decompose.hpp"

namespace liearr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json triples_json(const std::vector<TripleCheck>& triples, long long checked,
                          long long zero, long long nonzero, long long undecidable) {
  ordered_json t;
  t["checked"] = checked;
  t["zero"] = zero;
  t["nonzero"] = nonzero;
  t["undecidable"] = undecidable;
  ordered_json list = ordered_json::array();
  for (const auto& tc : triples) {
    ordered_json e;
    e["part"] = tc.part;
    e["x"] = tc.x;
    e["y"] = tc.y;
    e["z"] = tc.z;
    e["degree"] = tc.degree;
    e["status"] = tc.status_str();
    if (tc.status == TripleCheck::Status::Nonzero) e["residue"] = tc.residue;
    list.push_back(std::move(e));
  }
  t["products"] = std::move(list);
  return t;
}

void print_triples(std::ostringstream& os, const std::vector<TripleCheck>& triples,
                   long long checked, long long zero, long long nonzero, long long undecidable) {
  os << "triple products: checked " << checked << ", zero " << zero << ", nonzero " << nonzero
     << ", undecidable " << undecidable << "\n";
  for (const auto& t : triples) {
    if (t.status == TripleCheck::Status::Zero) continue;
    os << "  [" << t.x << ",[" << t.y << "," << t.z << "]] (degree " << t.degree
       << "): " << t.status_str();
    if (t.status == TripleCheck::Status::Nonzero) os << " = " << t.residue;
    os << "\n";
  }
}

}  // namespace

std::string DecompositionReport::to_text() const {
  std::ostringstream os;
  os << "field: " << field << "\n";
  os << "max degree: " << max_degree << "\n";
  os << "partition (" << parts.size() << " parts):\n";
  for (const auto& p : parts) {
    os << "  " << p.name << ": ";
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      if (i) os << " ";
      os << p.blocks[i];
    }
    os << "  support " << p.support << (p.closed ? "  [closed]" : "  [NOT CLOSED]") << "\n";
  }
  os << "replacement:\n";
  if (replacement.empty()) os << "  (no block has a shared generator)\n";
  for (const auto& r : replacement)
    os << "  block " << r.block << ", generator " << r.generator << ": " << r.kind_str() << "\n";
  os << "2-blocks pairwise disjoint: " << (two_blocks_disjoint ? "yes" : "no") << "\n";
  print_triples(os, triples, checked, zero, nonzero, undecidable);
  os << "dimension identity (dim L'_d vs sum over parts):\n";
  for (const auto& row : dims)
    os << "  d=" << row.degree << ": " << row.lhs << " vs " << row.rhs
       << (row.lhs == row.rhs ? "" : "  MISMATCH") << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  os << "verdict: " << verdict_str(verdict);
  if (verdict == Verdict::DecomposesAllDegrees)
    os << " (certified in every degree; dimensions verified to degree " << max_degree << ")";
  else if (verdict != Verdict::DoesNotDecompose) os << " " << max_degree;
  os << "\n";
  return os.str();
}

std::string DecompositionReport::to_structured() const {
  ordered_json j;
  j["command"] = "check";
  j["field"] = field;
  j["max_degree"] = max_degree;
  ordered_json partition = ordered_json::array();
  for (const auto& p : parts) {
    ordered_json e;
    e["name"] = p.name;
    e["blocks"] = p.blocks;
    e["support"] = p.support;
    e["closed"] = p.closed;
    partition.push_back(std::move(e));
  }
  j["partition"] = std::move(partition);
  j["closed"] = closed;
  ordered_json rj = ordered_json::array();
  for (const auto& r : replacement) {
    ordered_json e;
    e["block"] = r.block;
    e["generator"] = r.generator;
    e["verdict"] = r.kind_str();
    rj.push_back(std::move(e));
  }
  j["replacement"] = std::move(rj);
  j["two_blocks_disjoint"] = two_blocks_disjoint;
  j["triples"] = triples_json(triples, checked, zero, nonzero, undecidable);
  ordered_json dj;
  for (const auto& row : dims) {
    ordered_json e;
    e["lhs"] = row.lhs;
    e["rhs"] = row.rhs;
    dj[std::to_string(row.degree)] = std::move(e);
  }
  j["dims"] = std::move(dj);
  j["warnings"] = warnings;
  j["verdict"] = verdict_str(verdict);
  return j.dump(2);
}

std::string PartialReport::to_text() const {
  std::ostringstream os;
  os << "field: " << field << "\n";
  os << "max degree: " << max_degree << "\n";
  os << "sub-arrangement:";
  for (const auto& b : blocks) os << " " << b;
  os << "\nsupport: " << support << "\n";
  os << "complement generators:";
  for (const auto& c : complement) os << " " << c;
  os << "\n";
  print_triples(os, triples, checked, zero, nonzero, undecidable);
  os << "kernel of the projection (dim L_d  dim L_B,d  kernel  complement-span):\n";
  for (const auto& k : kernel)
    os << "  d=" << k.degree << ": " << k.algebra_dim << "  " << k.localized_dim << "  "
       << k.kernel_dim << "  " << k.complement_span
       << (k.kernel_dim == k.complement_span ? "" : "  MISMATCH") << "\n";
  os << "kernel = complement span: " << (kernel_matches_complement_span ? "yes" : "no") << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  os << "verdict: ";
  if (splits) {
    os << "splits as im x ker";
    if (verdict == Verdict::DecomposesAllDegrees) os << " (certified in every degree)";
    else os << " up to degree " << max_degree;
  } else {
    os << verdict_str(verdict);
  }
  os << "\n";
  return os.str();
}

std::string PartialReport::to_structured() const {
  ordered_json j;
  j["command"] = "partial";
  j["field"] = field;
  j["max_degree"] = max_degree;
  j["blocks"] = blocks;
  j["support"] = support;
  j["complement"] = complement;
  j["triples"] = triples_json(triples, checked, zero, nonzero, undecidable);
  ordered_json kj = ordered_json::array();
  for (const auto& k : kernel) {
    ordered_json e;
    e["degree"] = k.degree;
    e["dim"] = k.algebra_dim;
    e["localized_dim"] = k.localized_dim;
    e["kernel_dim"] = k.kernel_dim;
    e["complement_span"] = k.complement_span;
    kj.push_back(std::move(e));
  }
  j["kernel"] = std::move(kj);
  j["kernel_matches_complement_span"] = kernel_matches_complement_span;
  j["splits"] = splits;
  j["warnings"] = warnings;
  j["verdict"] = verdict_str(verdict);
  return j.dump(2);
}

}  // namespace liearr
