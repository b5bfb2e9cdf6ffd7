#include "coxlab/report.hpp"

#include <cstdio>

#include "coxlab/error.hpp"

namespace coxlab {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.open && !c.pass) return false;
  return true;
}

std::string subject_label(const Subject& s) {
  if (s.kind == "grid") return "grid " + std::to_string(s.m) + "x" + std::to_string(s.n);
  return std::string("cominuscule ") + s.type + std::to_string(s.rank) + " root " + std::to_string(s.root);
}

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::optional<T> read_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  nlohmann::ordered_json subject;
  subject["kind"] = r.subject.kind;
  if (r.subject.kind == "grid") {
    subject["m"] = r.subject.m;
    subject["n"] = r.subject.n;
  } else {
    subject["type"] = std::string(1, r.subject.type);
    subject["rank"] = r.subject.rank;
    subject["root"] = r.subject.root;
  }
  j["subject"] = subject;
  j["lattice_size"] = r.lattice_size;
  if (r.order)
    j["order"] = {{"k", r.order->k}, {"sign", r.order->sign}, {"exact", r.order->exact_order}};
  else
    j["order"] = nullptr;
  j["expected"] = {{"k", opt(r.expected.k)},
                   {"sign", opt(r.expected.sign)},
                   {"exact", opt(r.expected.exact)},
                   {"divides", opt(r.expected.divides)},
                   {"rule", r.expected.rule}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.open) cj["open"] = true;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["banner"] = r.banner.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.banner);
  j["passed"] = r.passed();
  j["ms"] = r.ms;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema") != kSchema) throw ParseError("unknown report schema " + j.at("schema").dump());
    VerificationReport r;
    const auto& s = j.at("subject");
    r.subject.kind = s.at("kind").get<std::string>();
    if (r.subject.kind == "grid") {
      r.subject.m = s.at("m").get<int>();
      r.subject.n = s.at("n").get<int>();
    } else if (r.subject.kind == "cominuscule") {
      const auto t = s.at("type").get<std::string>();
      if (t.size() != 1) throw ParseError("subject type must be one letter");
      r.subject.type = t[0];
      r.subject.rank = s.at("rank").get<int>();
      r.subject.root = s.at("root").get<int>();
    } else {
      throw ParseError("unknown subject kind " + r.subject.kind);
    }
    r.lattice_size = j.at("lattice_size").get<std::size_t>();
    if (!j.at("order").is_null()) {
      const auto& o = j.at("order");
      r.order = SignedOrder{o.at("k").get<std::size_t>(), o.at("sign").get<int>(), o.at("exact").get<std::size_t>()};
    }
    const auto& e = j.at("expected");
    r.expected.k = read_opt<std::size_t>(e, "k");
    r.expected.sign = read_opt<int>(e, "sign");
    r.expected.exact = read_opt<std::size_t>(e, "exact");
    r.expected.divides = read_opt<std::size_t>(e, "divides");
    r.expected.rule = e.at("rule").get<std::string>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>(),
                          c.value("open", false)});
    if (j.contains("banner") && !j.at("banner").is_null()) r.banner = j.at("banner").get<std::string>();
    r.ms = j.at("ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed report: ") + ex.what());
  }
}

std::string to_text(const VerificationReport& r) {
  std::string s = subject_label(r.subject) + "\n";
  if (!r.banner.empty()) s += "*** " + r.banner + " ***\n";
  s += "lattice size: " + std::to_string(r.lattice_size) + "\n";
  if (r.order)
    s += "order: Phi^" + std::to_string(r.order->k) + " = " + (r.order->sign > 0 ? "+I" : "-I") + ", exact order " +
         std::to_string(r.order->exact_order) + "\n";
  else
    s += "order: not found\n";
  s += "expected: " + r.expected.rule + "\n";
  for (const auto& c : r.checks) {
    s += c.open ? "[open] " : (c.pass ? "[pass] " : "[FAIL] ");
    s += c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f ms\n", r.ms);
  s += buf;
  s += r.passed() ? "result: PASS\n" : "result: FAIL\n";
  return s;
}

}  // namespace coxlab
