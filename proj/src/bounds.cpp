#include "sepmc/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sepmc/config.hpp"
#include "sepmc/modular.hpp"
#include "sepmc/pmc.hpp"
#include "sepmc/recognition.hpp"
#include "sepmc/separators.hpp"

namespace sepmc {

namespace {

BigInt ipow(BigInt base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

BoundsCheck make_check(const std::string& name, const BigInt& lhs, const BigInt& rhs) {
  return {name, lhs, rhs, lhs <= rhs};
}

bool is_conditional(const std::string& name) {
  return name == "MINSEP_MAIN" || name == "MINSEP_REFINED" || name == "PMC_MAIN" ||
         name == "CONNMOD";
}

}  // namespace

BoundsReport verify_bounds(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("verify_bounds: the graph must have at least one vertex");

  BoundsReport r;
  r.n = n;
  r.k = clique_number(g);
  const bool small = n <= oracle_limit();
  auto minseps = small ? enumerate_minseps_brute(g) : enumerate_minseps_generic(g);
  auto pmcs = small ? enumerate_pmcs_brute(g) : enumerate_pmcs_from_minseps(g, minseps);
  r.a = static_cast<long long>(minseps.size());
  r.b = static_cast<long long>(pmcs.size());
  r.strong_module_count = static_cast<long long>(strong_modules(g).size());
  r.connected_module_count = static_cast<long long>(connected_modules(g, r.k).size());
  r.is_p6_free = is_pt_free(g, 6);

  const BigInt a = r.a, b = r.b, bn = n;
  r.checks.push_back(make_check("MINSEP_MAIN", a, ipow(2 * bn, r.k + 1)));
  if (n >= 2 && r.k >= 2)
    r.checks.push_back(make_check("MINSEP_REFINED", a, ipow(2 * bn, r.k) * (2 * bn - 1)));
  r.checks.push_back(make_check("PMC_MAIN", b, ipow(2, 2 * r.k + 2) * ipow(bn, 2 * r.k + 3)));
  r.checks.push_back(make_check("BT_B", b, bn * (a * a + a + 1)));
  r.checks.push_back(make_check("BT_A", a, bn * b));
  r.checks.push_back(make_check("STRONG", r.strong_module_count, 2 * bn - 1));
  r.checks.push_back(make_check("CONNMOD", r.connected_module_count, ipow(2, r.k) * (2 * bn - 1)));
  return r;
}

bool required_checks_pass(const BoundsReport& report) {
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    if (!is_conditional(c.name) || report.is_p6_free) return false;
  }
  return true;
}

std::string to_text(const BoundsReport& r) {
  std::ostringstream out;
  out << "n " << r.n << '\n';
  out << "k " << r.k << '\n';
  out << "a " << r.a << '\n';
  out << "b " << r.b << '\n';
  out << "strong_module_count " << r.strong_module_count << '\n';
  out << "connected_module_count " << r.connected_module_count << '\n';
  out << "is_p6_free " << (r.is_p6_free ? "true" : "false") << '\n';
  for (const auto& c : r.checks)
    out << c.name << ' ' << c.lhs << " <= " << c.rhs << ' ' << (c.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_json(const BoundsReport& r) {
  nlohmann::ordered_json doc;
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["a"] = r.a;
  doc["b"] = r.b;
  doc["strong_module_count"] = r.strong_module_count;
  doc["connected_module_count"] = r.connected_module_count;
  doc["is_p6_free"] = r.is_p6_free;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["lhs"] = c.lhs.str();
    item["rhs"] = c.rhs.str();
    item["pass"] = c.pass;
    doc["checks"].push_back(item);
  }
  return doc.dump(2) + "\n";
}

}  // namespace sepmc
