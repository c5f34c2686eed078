#include "table_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sfcli {

using nlohmann::json;

std::vector<Monomial> monomials(const sf::BiPoly& p) {
  std::vector<Monomial> out;
  for (const sf::BiTerm& t : p.terms()) out.push_back({t.a, t.b, t.coeff});
  return out;
}

namespace {

json monos_json(const std::vector<Monomial>& ms) {
  json arr = json::array();
  for (const Monomial& m : ms) arr.push_back({{"tb", m.tb}, {"tw", m.tw}, {"coeff", sf::to_string(m.coeff)}});
  return arr;
}

std::vector<Monomial> monos_from(const json& arr) {
  if (!arr.is_array()) throw std::runtime_error("monomials must be an array");
  std::vector<Monomial> out;
  for (const json& m : arr) {
    const std::string c = m.at("coeff").get<std::string>();
    out.push_back({m.at("tb").get<int>(), m.at("tw").get<int>(), sf::parse_rational(c)});
  }
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

std::string terms_text(const std::vector<Monomial>& ms) {
  if (ms.empty()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < ms.size(); ++k) {
    if (k) os << " + ";
    os << '(' << sf::to_string(ms[k].coeff) << ")";
    if (ms[k].tb) os << " tb^" << ms[k].tb;
    if (ms[k].tw) os << " tw^" << ms[k].tw;
  }
  return os.str();
}

}  // namespace

std::string to_json(const Table& t) {
  json j;
  j["what"] = t.what;
  j["cap"] = t.cap;
  j["entries"] = json::array();
  for (const Entry& e : t.entries) {
    json je;
    if (is_integer(e.index))
      je["index"] = std::stol(e.index);
    else
      je["index"] = e.index;
    je["monomials"] = monos_json(e.monomials);
    if (e.reference) je["solver"] = monos_json(*e.reference);
    if (e.equal) je["equal"] = *e.equal;
    j["entries"].push_back(je);
  }
  return j.dump(2) + "\n";
}

Table from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Table t;
    t.what = j.at("what").get<std::string>();
    t.cap = j.at("cap").get<int>();
    for (const json& je : j.at("entries")) {
      Entry e;
      const json& idx = je.at("index");
      e.index = idx.is_number_integer() ? std::to_string(idx.get<long>()) : idx.get<std::string>();
      e.monomials = monos_from(je.at("monomials"));
      if (je.contains("solver")) e.reference = monos_from(je.at("solver"));
      if (je.contains("equal")) e.equal = je.at("equal").get<bool>();
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad table JSON: ") + ex.what());
  }
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  os << "index,tb_exp,tw_exp,coeff\n";
  auto rows = [&](const std::string& idx, const std::vector<Monomial>& ms) {
    for (const Monomial& m : ms) os << idx << ',' << m.tb << ',' << m.tw << ',' << sf::to_string(m.coeff) << '\n';
  };
  for (const Entry& e : t.entries) {
    rows(e.index, e.monomials);
    if (e.reference) rows(e.index + ":solver", *e.reference);
  }
  return os.str();
}

std::string to_text(const Table& t) {
  std::ostringstream os;
  os << t.what << " (cap " << t.cap << ")\n";
  for (const Entry& e : t.entries) {
    os << e.index;
    if (e.equal) os << (*e.equal ? "  [equal]" : "  [DIFFERENT]");
    os << "\n  " << terms_text(e.monomials) << '\n';
    if (e.reference) os << "  solver: " << terms_text(*e.reference) << '\n';
  }
  return os.str();
}

std::string render(const Table& t, Format f) {
  switch (f) {
    case Format::Json: return to_json(t);
    case Format::Csv: return to_csv(t);
    case Format::Text: return to_text(t);
  }
  return {};
}

}  // namespace sfcli
