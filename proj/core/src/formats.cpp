#include "braid/formats.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace braid {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
}

std::string read_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument(std::string("missing ") + what);
  return trim(line);
}

nlohmann::json status_json(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "YES";
    case SolveStatus::NoSolution:
      return "NO";
    default:
      return "INCONCLUSIVE";
  }
}

}  // namespace

ParabolicSpec parse_parabolic_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) parts.push_back(trim(cur));
  if (parts.size() == 2) parts.push_back("");  // empty alpha, no trailing ';'
  if (parts.size() != 3)
    throw std::invalid_argument("expected 'n; k l; <alpha word>': " + text);

  ParabolicSpec spec;
  spec.n = parse_int(parts[0], "n");
  std::istringstream kl(parts[1]);
  std::string ks, ls;
  if (!(kl >> ks >> ls) || !kl.eof())
    throw std::invalid_argument("expected 'k l': '" + parts[1] + "'");
  spec.interval = {parse_int(ks, "k"), parse_int(ls, "l")};
  spec.alpha = parse_word(parts[2], spec.n);
  validate(spec);
  return spec;
}

std::string format_parabolic_spec(const ParabolicSpec& spec) {
  std::ostringstream out;
  out << spec.n << "; " << spec.interval.k << " " << spec.interval.l << "; "
      << format_word(spec.alpha);
  return out.str();
}

DCPInstance parse_dcp_instance(std::istream& in) {
  DCPInstance inst;
  inst.n = parse_int(read_line(in, "line 1 (n)"), "n");
  inst.a_spec = parse_parabolic_spec(read_line(in, "line 2 (A-spec)"));
  inst.b_spec = parse_parabolic_spec(read_line(in, "line 3 (B-spec)"));
  std::string g_line, gp_line;
  std::getline(in, g_line);  // may legitimately be empty words
  std::getline(in, gp_line);
  inst.g = parse_word(trim(g_line), inst.n);
  inst.g_prime = parse_word(trim(gp_line), inst.n);
  validate(inst);
  return inst;
}

DCPInstance read_dcp_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_dcp_instance(in);
}

std::string format_dcp_instance(const DCPInstance& inst) {
  std::ostringstream out;
  out << inst.n << "\n"
      << format_parabolic_spec(inst.a_spec) << "\n"
      << format_parabolic_spec(inst.b_spec) << "\n"
      << format_word(inst.g) << "\n"
      << format_word(inst.g_prime) << "\n";
  return out.str();
}

ConjTuple parse_tuple(std::istream& in, int n) {
  ConjTuple t{n, {}};
  std::string line;
  while (std::getline(in, line)) t.components.push_back(parse_word(trim(line), n));
  validate(t);
  return t;
}

ConjTuple read_tuple(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_tuple(in, n);
}

std::string dcp_result_json(const DCPResult& r) {
  nlohmann::json j;
  j["status"] = status_json(r.status);
  if (r.solution) {
    j["a"] = format_word(r.solution->a);
    j["b"] = format_word(r.solution->b);
    const auto& d = r.solution->diagnostics;
    j["diagnostics"] = {{"a_tilde", format_word(d.a_tilde)},
                        {"k", d.delta_exponent},
                        {"a_hat", format_word(d.a_hat)},
                        {"b_hat", format_word(d.b_hat)}};
  }
  return j.dump();
}

std::string conj_result_json(const ConjResult& r) {
  nlohmann::json j;
  j["status"] = status_json(r.status);
  if (r.status == SolveStatus::Solved)
    j["conjugator"] = format_word(r.conjugator);
  return j.dump();
}

std::string dcp_violation_json(const InvariantViolation& e) {
  nlohmann::json j;
  j["status"] = "ERROR";
  j["error"] = e.what();
  j["diagnostics"] = {{"a_tilde", format_word(e.diagnostics.a_tilde)},
                      {"k", e.diagnostics.delta_exponent},
                      {"a_hat", format_word(e.diagnostics.a_hat)},
                      {"b_hat", format_word(e.diagnostics.b_hat)}};
  return j.dump();
}

}  // namespace braid
