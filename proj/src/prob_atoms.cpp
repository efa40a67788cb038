#include "klab/prob/atoms.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace klab::prob {

namespace {

bool is_bottom_key(const std::string& k) {
  return k == "⊥" || k == "_|_" || k == "bot";
}

}  // namespace

Kernel<dist_monad> AtomTable::pure_atom(const std::string& name) const {
  const Kernel<DM>& k = atom(name);
  Kernel<dist_monad> out;
  out.reserve(k.size());
  for (const auto& d : k) {
    std::vector<std::pair<int, Rat>> ws;
    for (auto& [mx, w] : d.entries) {
      if (!mx)
        throw std::invalid_argument("atom '" + name +
                                    "' is partial; base fragment needs pure atoms");
      ws.emplace_back(*mx, w);
    }
    out.push_back(Dist<int>::make(std::move(ws)));
  }
  return out;
}

Kernel<DM> AtomTable::bernoulli(const AtomTable& t, const Rat& p) {
  if (p < Rat(0) || Rat(1) < p)
    throw std::invalid_argument("bernoulli: parameter outside [0,1]");
  int one = t.state("1"), zero = t.state("0");
  std::vector<std::pair<Maybe<int>, Rat>> ws;
  if (!p.is_zero()) ws.emplace_back(Maybe<int>(one), p);
  if (p != Rat(1)) ws.emplace_back(Maybe<int>(zero), Rat(1) - p);
  auto d = Dist<Maybe<int>>::make(std::move(ws));
  return constant_kernel<DM>((int)t.carrier.size(), d);
}

AtomTable AtomTable::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("atom table: bad JSON: ") + e.what());
  }
  AtomTable t;
  if (!doc.contains("carrier") || !doc["carrier"].is_array())
    throw std::invalid_argument("atom table: missing carrier list");
  for (const auto& s : doc["carrier"]) {
    std::string name = s.get<std::string>();
    if (t.index.count(name))
      throw std::invalid_argument("atom table: duplicate state '" + name + "'");
    t.index[name] = (int)t.carrier.size();
    t.carrier.push_back(name);
  }
  int n = (int)t.carrier.size();

  for (auto& [name, spec] : doc.value("atoms", nlohmann::json::object()).items()) {
    if (spec.is_string()) {
      std::string s = spec.get<std::string>();
      if (s.rfind("bernoulli(", 0) == 0 && s.back() == ')') {
        Rat p = Rat::parse(s.substr(10, s.size() - 11));
        t.atoms[name] = bernoulli(t, p);
        continue;
      }
      throw std::invalid_argument("atom '" + name + "': unknown generator " + s);
    }
    Kernel<DM> k((std::size_t)n);
    std::vector<bool> covered((std::size_t)n, false);
    for (auto& [from, row] : spec.items()) {
      int x = t.state(from);
      covered[(std::size_t)x] = true;
      std::vector<std::pair<Maybe<int>, Rat>> ws;
      for (auto& [to, wtext] : row.items()) {
        Rat w = Rat::parse(wtext.get<std::string>());
        if (is_bottom_key(to)) {
          ws.emplace_back(Maybe<int>{}, w);
          t.pure = false;
        } else {
          ws.emplace_back(Maybe<int>(t.state(to)), w);
        }
      }
      k[(std::size_t)x] = Dist<Maybe<int>>::make(std::move(ws));
    }
    for (int x = 0; x < n; ++x)
      if (!covered[(std::size_t)x])
        throw std::invalid_argument("atom '" + name + "' misses state '" +
                                    t.carrier[(std::size_t)x] + "'");
    t.atoms[name] = std::move(k);
  }

  for (auto& [name, states] : doc.value("tests", nlohmann::json::object()).items()) {
    TestPred pred{std::vector<bool>((std::size_t)n, false)};
    for (const auto& s : states)
      pred.truth[(std::size_t)t.state(s.get<std::string>())] = true;
    t.tests[name] = std::move(pred);
  }
  return t;
}

AtomTable AtomTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open atom table: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace klab::prob
