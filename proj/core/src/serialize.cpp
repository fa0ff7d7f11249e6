#include "hypercert/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace hypercert {
namespace {

using Tree = nlohmann::ordered_json;

Tree complex_pair(std::complex<double> z) { return Tree::array({z.real(), z.imag()}); }

Tree params_tree(const HypergeomParams& p) { return {{"u", p.u}, {"v", p.v}, {"w", p.w}}; }

Tree pair_tree(const JanowskiPair& j) {
  return {{"C", j.C}, {"D", j.D}, {"convention", std::string(to_string(j.convention))}};
}

bool is_pair(const Tree& t) {
  return t.is_array() && !t.empty() &&
         std::all_of(t.begin(), t.end(), [](const Tree& e) { return e.is_number(); });
}

std::string scalar_text(const Tree& t, bool json) {
  if (t.is_number_float()) {
    const std::string s = format_number(t.get<double>());
    return (json && !std::isfinite(t.get<double>())) ? "\"" + s + "\"" : s;
  }
  if (t.is_number()) return t.dump();
  if (t.is_boolean()) return t.get<bool>() ? "true" : "false";
  if (t.is_null()) return "null";
  return json ? t.dump() : t.get<std::string>();
}

std::string pair_text(const Tree& t, bool json) {
  std::string out = json ? "[" : "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(t[i], json);
  }
  return out + (json ? "]" : ")");
}

void text_node(const Tree& t, int indent, std::string& out);

void text_value(const std::string& prefix, const Tree& t, int indent, std::string& out) {
  if (is_pair(t)) {
    out += prefix + " " + pair_text(t, false) + "\n";
  } else if ((t.is_array() || t.is_object()) && t.empty()) {
    out += prefix + (t.is_array() ? " []\n" : " {}\n");
  } else if (t.is_array() || t.is_object()) {
    out += prefix + "\n";
    text_node(t, indent + 1, out);
  } else {
    out += prefix + " " + scalar_text(t, false) + "\n";
  }
}

void text_node(const Tree& t, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (t.is_object()) {
    for (const auto& [key, value] : t.items()) text_value(pad + key + ":", value, indent, out);
    return;
  }
  for (const auto& item : t) {
    if (item.is_object() && !item.empty()) {
      // First key shares the line with the list marker.
      std::string block;
      text_node(item, indent + 1, block);
      block.replace(pad.size(), 2, "- ");
      out += block;
    } else if (is_pair(item) || !item.is_structured()) {
      out += pad + "- " + (is_pair(item) ? pair_text(item, false) : scalar_text(item, false)) +
             "\n";
    } else {
      text_value(pad + "-", item, indent, out);
    }
  }
}

void json_node(const Tree& t, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (is_pair(t)) {
    out += pair_text(t, true);
  } else if (t.is_object()) {
    if (t.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : t.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Tree(key).dump() + ": ";
      json_node(value, indent + 1, out);
    }
    out += "\n" + pad + "}";
  } else if (t.is_array()) {
    if (t.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      json_node(t[i], indent + 1, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += scalar_text(t, true);
  }
}

std::string render_tree(const std::string& root, const Tree& t, TreeFormat format) {
  std::string out;
  if (format == TreeFormat::Json) {
    json_node(t, 0, out);
    return out + "\n";
  }
  out = root + ":\n";
  text_node(t, 1, out);
  return out;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render(const Certificate& c, TreeFormat format) {
  Tree t;
  t["condition_set"] = std::string(to_string(c.condition_set));
  t["params"] = params_tree(c.params);
  if (c.pair) t["janowski"] = pair_tree(*c.pair);
  t["interpretation_notes"] = Tree::array();
  for (const auto& n : c.interpretation_notes) t["interpretation_notes"].push_back(n);
  t["sub_results"] = Tree::array();
  for (const auto& s : c.sub_results) {
    t["sub_results"].push_back({{"id", s.id},
                                {"relation", std::string(to_string(s.relation))},
                                {"lhs", s.lhs},
                                {"rhs", s.rhs},
                                {"holds", s.holds},
                                {"margin", s.margin},
                                {"required", s.required}});
  }
  t["overall"] = c.overall;
  return render_tree("certificate", t, format);
}

std::string render(const VerificationReport& r, TreeFormat format) {
  Tree t;
  t["limitation"] = std::string(kGridEvidenceNote);
  t["kind"] = std::string(to_string(r.kind));
  Tree target = {{"kind", std::string(to_string(r.target.kind))}};
  if (r.target.kind == Target::Kind::Janowski) target["pair"] = pair_tree(r.target.pair);
  t["target"] = target;
  t["params"] = params_tree(r.params);
  t["samples"] = r.samples;
  t["violations"] = r.violations;
  t["min_margin"] = r.min_margin;
  t["worst_point"] = complex_pair(r.worst_point);
  t["worst_value"] = complex_pair(r.worst_value);
  t["denominator_alerts"] = Tree::array();
  for (auto z : r.denominator_alerts) t["denominator_alerts"].push_back(complex_pair(z));
  t["evaluation_errors"] = Tree::array();
  for (auto z : r.evaluation_errors) t["evaluation_errors"].push_back(complex_pair(z));
  t["counterexamples"] = Tree::array();
  for (const auto& s : r.counterexamples) {
    t["counterexamples"].push_back(
        {{"z", complex_pair(s.z)}, {"value", complex_pair(s.value)}, {"margin", s.margin}});
  }
  t["passed"] = r.passed;
  return render_tree("verification_report", t, format);
}

std::string render(const SeriesValue& s, TreeFormat format) {
  Tree t = {{"value", complex_pair(s.value)},
            {"tail_bound", s.tail_bound},
            {"terms_used", s.terms_used},
            {"extended_precision", s.extended}};
  return render_tree("series_value", t, format);
}

std::string render_functional(FunctionalKind kind, const HypergeomParams& p,
                              std::complex<double> z, std::complex<double> value,
                              TreeFormat format) {
  Tree t = {{"kind", std::string(to_string(kind))},
            {"params", params_tree(p)},
            {"z", complex_pair(z)},
            {"value", complex_pair(value)}};
  return render_tree("functional_value", t, format);
}

std::string render(const ScanSummary& s, const std::vector<ScanRow>& rows, TreeFormat format) {
  Tree t;
  t["rows"] = s.rows;
  t["errors"] = s.errors;
  t["feasible"] = s.feasible;
  t["verified"] = s.verified;
  t["verify_failed"] = s.verify_failed;
  Tree holds = Tree::object();
  for (const auto& [id, n] : s.holds_count) holds[id] = n;
  t["holds_count"] = holds;
  if (s.feasible_box.empty) {
    t["feasible_box"] = "empty";
  } else {
    static constexpr const char* names[] = {"u", "v", "w", "C", "D"};
    const bool janowski = !rows.empty() && rows.front().pair.has_value();
    Tree box = Tree::object();
    for (int k = 0; k < (janowski ? 5 : 3); ++k) {
      box[names[k]] = Tree::array({s.feasible_box.lo[k], s.feasible_box.hi[k]});
    }
    t["feasible_box"] = box;
  }
  const bool janowski = !rows.empty() && rows.front().pair.has_value();
  t["representative_columns"] =
      janowski ? Tree::array({"u", "v", "w", "C", "D"}) : Tree::array({"u", "v", "w"});
  t["representatives"] = Tree::array();
  for (std::size_t i : s.representatives) {
    const ScanRow& r = rows.at(i);
    Tree rep = Tree::array({r.params.u, r.params.v, r.params.w});
    if (r.pair) {
      rep.push_back(r.pair->C);
      rep.push_back(r.pair->D);
    }
    t["representatives"].push_back(rep);
  }
  return render_tree("scan_summary", t, format);
}

}  // namespace hypercert
