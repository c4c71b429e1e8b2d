#include "qsc/report.hpp"

#include <cstdio>
#include <sstream>

namespace qsc {

namespace {

void write_kv(std::ostringstream& json, std::ostringstream& text, const std::string& key,
              const std::string& value, bool quoted, bool& first) {
  json << (first ? "" : ",\n") << "  \"" << key << "\": ";
  if (quoted)
    json << '"' << value << '"';
  else
    json << value;
  text << key << " = " << value << '\n';
  first = false;
}

std::string real_list(const std::vector<double>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_real(values[i]);
  }
  out << ']';
  return out.str();
}

struct DocumentWriter {
  std::ostringstream json;
  std::ostringstream text;
  bool first = true;

  DocumentWriter() { json << "{\n"; }

  void real(const std::string& key, double v) { write_kv(json, text, key, format_real(v), false, first); }
  void integer(const std::string& key, std::int64_t v) {
    write_kv(json, text, key, std::to_string(v), false, first);
  }
  void unsigned_integer(const std::string& key, std::uint64_t v) {
    write_kv(json, text, key, std::to_string(v), false, first);
  }
  void string(const std::string& key, const std::string& v) { write_kv(json, text, key, v, true, first); }
  void raw(const std::string& key, const std::string& v) { write_kv(json, text, key, v, false, first); }

  std::string finish_json() {
    json << "\n}\n";
    return json.str();
  }
};

DocumentWriter write_analysis(const AnalysisDocument& doc) {
  DocumentWriter w;
  const ProtocolReport& r = doc.report;
  w.integer("n", r.n);
  w.integer("d", r.d);
  w.unsigned_integer("group_order", r.group_order);
  w.raw("eigenvalues", real_list(r.eigenvalues));
  w.real("sum_bound", r.sum_bound);
  w.real("a_bits", r.a_bits);
  w.real("renyi_a_bits", r.renyi_a_bits);
  w.real("attack_sum", r.attack_sum);
  if (doc.search_best_sum) w.real("search_best_sum", *doc.search_best_sum);
  w.real("i_acc_bits", r.i_acc_bits);
  w.real("b_bits", r.b_bits);
  w.string("concealing_method", to_string(r.concealing_method));
  w.string("classification", to_string(r.classification));
  w.real("margin", r.margin);
  w.unsigned_integer("seed", doc.seed);
  return w;
}

DocumentWriter write_attack(const AttackDocument& doc) {
  DocumentWriter w;
  std::ostringstream map;
  map << '{';
  for (std::size_t i = 0; i < doc.p_tilde.size(); ++i) {
    if (i) map << ", ";
    map << '"' << doc.p_tilde[i].first << "\": " << format_real(doc.p_tilde[i].second);
  }
  map << '}';
  w.raw("p_tilde", map.str());
  w.real("sum", doc.sum);
  w.real("bound", doc.bound);
  w.real("reduced_state_distance", doc.reduced_state_distance);
  return w;
}

}  // namespace

std::string format_real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_json(const AnalysisDocument& doc) { return write_analysis(doc).finish_json(); }
std::string to_text(const AnalysisDocument& doc) { return write_analysis(doc).text.str(); }

std::string to_json(const AttackDocument& doc) { return write_attack(doc).finish_json(); }
std::string to_text(const AttackDocument& doc) { return write_attack(doc).text.str(); }

}  // namespace qsc
