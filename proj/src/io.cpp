#include "pdc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <variant>

#include "pdc/error.hpp"

namespace pdc {

namespace {

using nlohmann::json;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto pos = message.find(": "); pos != std::string::npos) message = message.substr(pos + 2);
    throw ParseError("syntax error: " + message, line, column);
  }
}

const json& member(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) throw ParseError("expected an object", ptr);
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field \"" + key + "\"", ptr);
  return *it;
}

Rational rational_at(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(std::to_string(v.get<std::uint64_t>()))
                                  : Rational(std::to_string(v.get<std::int64_t>()));
  }
  if (!v.is_string()) throw ParseError("expected a rational string \"p\" or \"p/q\"", ptr);
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad rational: ") + e.what(), ptr);
  }
}

Vec vector_at(const json& v, std::size_t n, const std::string& ptr) {
  if (!v.is_array()) throw ParseError("expected an array", ptr);
  if (v.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()), ptr);
  }
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], child(ptr, i)));
  return out;
}

const json* optional_array(const json& obj, const std::string& key, const std::string& ptr) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  if (!it->is_array()) throw ParseError("expected an array", child(ptr, key));
  return &*it;
}

PolyhedralSet set_at(const json& v, std::size_t n, const std::string& ptr) {
  if (!v.is_object()) throw ParseError("expected a set object", ptr);
  PolyhedralSet s{n, {}, {}};
  if (const json* eqs = optional_array(v, "eq", ptr)) {
    for (std::size_t i = 0; i < eqs->size(); ++i) {
      const std::string p = child(child(ptr, "eq"), i);
      const json& row = (*eqs)[i];
      s.equalities.push_back(
          {vector_at(member(row, "a", p), n, child(p, "a")), rational_at(member(row, "y", p), child(p, "y"))});
    }
  }
  if (const json* ineqs = optional_array(v, "ineq", ptr)) {
    for (std::size_t i = 0; i < ineqs->size(); ++i) {
      const std::string p = child(child(ptr, "ineq"), i);
      const json& row = (*ineqs)[i];
      s.inequalities.push_back(
          {vector_at(member(row, "a", p), n, child(p, "a")), rational_at(member(row, "b", p), child(p, "b"))});
    }
  }
  return s;
}

MaxAffine function_at(const json& v, std::size_t n, const std::string& ptr) {
  const json& pieces = member(v, "pieces", ptr);
  const std::string pp = child(ptr, "pieces");
  if (!pieces.is_array() || pieces.empty()) throw ParseError("expected a nonempty array of pieces", pp);
  MaxAffine f;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string p = child(pp, i);
    AffinePiece piece{vector_at(member(pieces[i], "u", p), n, child(p, "u")),
                      rational_at(member(pieces[i], "alpha", p), child(p, "alpha"))};
    for (std::size_t k = 0; k < f.pieces.size(); ++k) {
      if (f.pieces[k] == piece) throw ParseError("repeats piece " + std::to_string(k), p);
    }
    f.pieces.push_back(std::move(piece));
  }
  const auto dom = v.find("domain");
  f.domain = (dom == v.end() || dom->is_null()) ? PolyhedralSet::whole_space(n) : set_at(*dom, n, child(ptr, "domain"));
  return f;
}

std::vector<Vec> vectors_at(const json& doc, const std::string& key, std::size_t n) {
  const json& arr = member(doc, key, "");
  if (!arr.is_array()) throw ParseError("expected an array", "/" + key);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(vector_at(arr[i], n, child("/" + key, i)));
  return out;
}

Json constraints_json(const Constraints& rows, const char* rhs_key) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"a", to_json(r.a)}, {rhs_key, to_json(r.rhs)}});
  return out;
}

Json function_json(const MaxAffine& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces) pieces.push_back({{"u", to_json(p.u)}, {"alpha", to_json(p.alpha)}});
  const bool whole = f.domain.equalities.empty() && f.domain.inequalities.empty();
  return {{"pieces", pieces}, {"domain", whole ? Json(nullptr) : to_json(f.domain)}};
}

}  // namespace

DcProblem parse_problem(std::string_view text) {
  const json doc = parse_document(text);
  const json& dim = member(doc, "dimension", "");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0) {
    throw ParseError("dimension must be a positive integer", "/dimension");
  }
  const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());
  PolyhedralSet C = set_at(member(doc, "C", ""), n, "/C");
  MaxAffine g = function_at(member(doc, "g", ""), n, "/g");
  MaxAffine h = function_at(member(doc, "h", ""), n, "/h");
  return make_problem(std::move(g), std::move(h), std::move(C));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file " + path, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json problem_to_json(const DcProblem& prob) {
  return {{"dimension", prob.dimension()},
          {"C", to_json(prob.C)},
          {"g", function_json(prob.g)},
          {"h", function_json(prob.h)}};
}

ActiveSetTable parse_table(std::string_view text) {
  const json doc = parse_document(text);
  const json& rows = member(doc, "table", "");
  if (!rows.is_array()) throw ParseError("expected an array", "/table");
  ActiveSetTable table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = child("/table", i);
    const json& active = member(rows[i], "active", p);
    const json& choose = member(rows[i], "choose", p);
    if (!active.is_array()) throw ParseError("expected an array of piece indices", child(p, "active"));
    IndexSet key;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (!active[k].is_number_unsigned()) throw ParseError("expected a piece index", child(child(p, "active"), k));
      key.push_back(active[k].get<std::size_t>());
    }
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw ParseError("repeated index in active set", child(p, "active"));
    }
    if (!choose.is_number_unsigned()) throw ParseError("expected a piece index", child(p, "choose"));
    if (!table.choice.emplace(key, choose.get<std::size_t>()).second) {
      throw ParseError("active set listed twice", child(p, "active"));
    }
  }
  return table;
}

Scripted parse_script(std::string_view text, std::size_t dimension) {
  return Scripted{vectors_at(parse_document(text), "subgradients", dimension)};
}

std::pair<std::vector<Vec>, std::vector<Vec>> parse_trace(std::string_view text, std::size_t dimension) {
  const json doc = parse_document(text);
  return {vectors_at(doc, "points", dimension), vectors_at(doc, "subgradients", dimension)};
}

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const ExtendedRational& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i);
  return out;
}

Json to_json(const PolyhedralSet& s) {
  return {{"eq", constraints_json(s.equalities, "y")}, {"ineq", constraints_json(s.inequalities, "b")}};
}

Json to_json(const ConvexBody& b) {
  Json points = Json::array(), rays = Json::array(), lineality = Json::array();
  for (const auto& p : b.points) points.push_back(to_json(p));
  for (const auto& r : b.rays) rays.push_back(to_json(r));
  for (const auto& l : b.lineality) lineality.push_back(to_json(l));
  return {{"points", points}, {"rays", rays}, {"lineality", lineality}};
}

Json classification_report(const DcProblem& prob, const Vec& x, const Classification& c) {
  Json out = {{"point", to_json(x)}, {"feasible", c.feasible}};
  if (c.feasible) {
    out["f"] = to_json(objective(prob, x));
    out["active_g"] = to_json(active_indices(prob.g, x));
    out["active_h"] = to_json(active_indices(prob.h, x));
  }
  out["critical"] = c.critical;
  out["stationary"] = c.stationary;
  out["local"] = to_string(c.local);
  out["global"] = to_string(c.global);
  out["hypotheses"] = {{"interior_dom_g", c.flags.interior_dom_g},
                       {"interior_dom_h", c.flags.interior_dom_h},
                       {"interior_both", c.flags.interior_both},
                       {"boundary_subdifferential_extension", c.flags.boundary_extension}};
  return out;
}

Json structure_report(const DcProblem& prob, const SolutionStructure& s) {
  Json lins = Json::array();
  for (const auto& lin : s.global.linearizations) {
    Json item = {{"piece", lin.j}, {"alpha", to_json(lin.alpha)}};
    item["witness"] = lin.witness ? to_json(*lin.witness) : Json(nullptr);
    item["face"] = lin.face ? to_json(*lin.face) : Json(nullptr);
    lins.push_back(std::move(item));
  }
  Json pieces = Json::array();
  for (std::size_t p = 0; p < s.pieces.size(); ++p) {
    const SemiClosedPiece& piece = s.pieces[p];
    Json cells = Json::array();
    for (const auto& c : piece.cells) cells.push_back({{"leader", c.leader}, {"witness", to_json(c.witness)}});
    pieces.push_back({{"id", p},
                      {"subset", to_json(piece.subset)},
                      {"excluded", to_json(piece.excluded)},
                      {"witness", to_json(piece.witness())},
                      {"f", to_json(objective(prob, piece.witness()))},
                      {"cells", cells},
                      {"closed_part", to_json(piece.closed_part)}});
  }
  Json adj = Json::array();
  for (const auto& a : s.analysis.adjacencies) {
    adj.push_back({{"pieces", {a.a, a.b}}, {"witness", to_json(a.witness)}});
  }
  Json comps = Json::array();
  for (const auto& c : s.analysis.components) {
    comps.push_back({{"pieces", to_json(c.pieces)},
                     {"representative", to_json(c.representative)},
                     {"f", to_json(c.value)},
                     {"constant", c.constant}});
  }
  return {{"global", {{"alpha_bar", to_json(s.global.alpha_bar)},
                      {"unbounded", s.global.unbounded()},
                      {"j_star", to_json(s.global.j_star)},
                      {"linearizations", lins}}},
          {"local_pieces", pieces},
          {"adjacencies", adj},
          {"components", comps}};
}

Json dca_report(const DcaTrace& trace, const SelectionRule& rule) {
  Json iterates = Json::array();
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    const auto& it = trace.iterates[k];
    iterates.push_back({{"k", k},
                        {"x", to_json(it.x)},
                        {"xi", it.xi ? to_json(*it.xi) : Json(nullptr)},
                        {"f", to_json(it.f)}});
  }
  Json term = {{"kind", to_string(trace.termination)}};
  switch (trace.termination) {
    case Termination::Cycle:
      term["start"] = trace.cycle_start;
      term["period"] = trace.period;
      break;
    case Termination::FixedPoint:
      term["step"] = trace.step;
      term["limit"] = to_json(trace.iterates.back().x);
      break;
    default: term["step"] = trace.step;
  }
  return {{"rule", rule_name(rule)}, {"termination", term}, {"iterates", iterates}};
}

Json trace_report(const TraceReport& report) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < report.steps.size(); ++k) {
    const StepCheck& s = report.steps[k];
    steps.push_back({{"k", k}, {"subgradient", s.subgradient}, {"minimizer", s.minimizer}, {"descent", s.descent}});
  }
  Json values = Json::array();
  for (const auto& v : report.values) values.push_back(to_json(v));
  Json out = {{"valid", report.valid}, {"f", values}, {"steps", steps}};
  if (report.trailing_subgradient) out["trailing_subgradient"] = *report.trailing_subgradient;
  return out;
}

Json dual_report(const DualReport& report) {
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    cands.push_back({{"xi", to_json(c.xi)}, {"dual_value", to_json(c.value)}, {"origin", c.origin}});
  }
  return {{"primal_value", to_json(report.primal_value)},
          {"bounded_below", report.bounded_below},
          {"attained_at", report.attained_at ? to_json(*report.attained_at) : Json(nullptr)},
          {"candidates", cands}};
}

Json grid_report(const GridReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item = {{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}};
    if (c.skipped) item["skipped"] = c.skip_reason;
    if (c.first_failure) item["first_failure"] = to_json(*c.first_failure);
    checks.push_back(std::move(item));
  }
  return {{"step", to_json(report.step)},
          {"box", {{"lower", to_json(report.lower)}, {"upper", to_json(report.upper)}}},
          {"points", report.points},
          {"passed", report.passed()},
          {"checks", checks}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pdc
