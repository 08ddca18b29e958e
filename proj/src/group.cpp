#include "singraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "singraph/errors.hpp"

namespace sg {

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> table, bool associativity_verified)
    : n_(n), table_(std::move(table)), associativity_verified_(associativity_verified) {
  derive();
}

void FiniteGroup::derive() {
  inverse_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (op(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  class_index_.assign(n_, n_);
  classes_.clear();
  for (Element g = 0; g < n_; ++g) {
    if (class_index_[g] != n_) continue;
    std::vector<Element> cls;
    for (Element x = 0; x < n_; ++x) cls.push_back(conjugate(g, x));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (Element c : cls) class_index_[c] = classes_.size();
    classes_.push_back(std::move(cls));
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t), true);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  std::vector<Element> t;
  t.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw InputError("group table is not square (row " + std::to_string(i) + ")");
    for (Element x : table[i]) {
      if (x >= n) throw InputError("group table entry " + std::to_string(x) + " out of range");
      t.push_back(x);
    }
  }
  auto at = [&](Element a, Element b) { return t[a * n + b]; };
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Element b = 0; b < n; ++b) {
      if (row[at(a, b)]) throw InputError("not a Latin square: row " + std::to_string(a) + " repeats an entry");
      if (col[at(b, a)]) throw InputError("not a Latin square: column " + std::to_string(a) + " repeats an entry");
      row[at(a, b)] = col[at(b, a)] = true;
    }
  }
  for (Element a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw InputError("identity failure: element 0 is not a two-sided identity (at " + std::to_string(a) + ")");
  // A Latin square with identity has right inverses; two-sided ones are checked here.
  for (Element a = 0; a < n; ++a) {
    Element b = 0;
    while (at(a, b) != 0) ++b;
    if (at(b, a) != 0) throw InputError("inverse failure: element " + std::to_string(a) + " has no two-sided inverse");
  }
  const bool check = n <= kAssociativityCheckLimit;
  if (check)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = at(a, b);
        for (Element c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw InputError("associativity failure: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                             std::to_string(c) + " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                             std::to_string(c) + ")");
      }
  return FiniteGroup(n, std::move(t), check);
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) t[a][b] = op(a, b);
  return t;
}

nlohmann::json FiniteGroup::to_json() const { return {{"table", table()}}; }

FiniteGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("group document must be a JSON object");
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_number_unsigned()) throw InputError("\"cyclic\" must be a positive integer");
    return FiniteGroup::cyclic(j["cyclic"].get<std::size_t>());
  }
  if (j.contains("table")) {
    try {
      return FiniteGroup::from_table(j["table"].get<std::vector<std::vector<Element>>>());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed group table: ") + e.what());
    }
  }
  throw InputError("group document needs \"cyclic\" or \"table\"");
}

// ---------------------------------------------------------------------------

GroupSubset::GroupSubset(std::initializer_list<Element> members) : GroupSubset(std::vector<Element>(members)) {}

GroupSubset::GroupSubset(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool GroupSubset::contains(Element g) const { return std::binary_search(members_.begin(), members_.end(), g); }

void check_subset(const FiniteGroup& g, const GroupSubset& s) {
  if (!s.empty() && s.members().back() >= g.order())
    throw InputError("element " + std::to_string(s.members().back()) + " is not in a group of order " +
                     std::to_string(g.order()));
}

std::string ConnectingSetReport::describe() const {
  if (ok()) return "connecting set";
  std::ostringstream os;
  const char* sep = "";
  if (!generates) {
    os << "(i) does not generate the group (generates a subgroup of order " << generated.size() << ")";
    sep = "; ";
  }
  if (!symmetric) {
    os << sep << "(ii) not closed under inverses (missing";
    for (Element e : missing_inverses) os << ' ' << e;
    os << ")";
    sep = "; ";
  }
  if (!excludes_identity) os << sep << "(iii) contains the identity";
  return os.str();
}

ConnectingSetReport is_connecting_set(const FiniteGroup& g, const GroupSubset& h) {
  check_subset(g, h);
  ConnectingSetReport r;
  r.generated = subgroup_generated(g, h);
  r.generates = r.generated.size() == g.order();
  for (Element x : h)
    if (!h.contains(g.inverse(x))) r.missing_inverses.push_back(g.inverse(x));
  std::sort(r.missing_inverses.begin(), r.missing_inverses.end());
  r.missing_inverses.erase(std::unique(r.missing_inverses.begin(), r.missing_inverses.end()),
                           r.missing_inverses.end());
  r.symmetric = r.missing_inverses.empty();
  r.excludes_identity = !h.contains(0);
  return r;
}

GroupSubset subgroup_generated(const FiniteGroup& g, const GroupSubset& s) {
  check_subset(g, s);
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{0}, queue{0};
  in[0] = true;
  // In a finite group closure under right multiplication by S suffices.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (Element t : s) {
      const Element y = g.op(x, t);
      if (in[y]) continue;
      in[y] = true;
      members.push_back(y);
      queue.push_back(y);
    }
  }
  return GroupSubset(std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const GroupSubset& s) {
  check_subset(g, s);
  if (!s.contains(0)) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(g.op(a, b))) return false;
  return true;
}

GroupSubset left_stabilizer(const FiniteGroup& g, const GroupSubset& h) {
  check_subset(g, h);
  std::vector<Element> k;
  for (Element x = 0; x < g.order(); ++x) {
    bool stable = true;
    for (Element y : h)
      if (!h.contains(g.op(x, y))) {
        stable = false;
        break;
      }
    if (stable) k.push_back(x);
  }
  return GroupSubset(std::move(k));
}

std::vector<GroupSubset> cosets(const FiniteGroup& g, const GroupSubset& k, CosetSide side) {
  if (!is_subgroup(g, k)) throw InputError("cosets: K is not a subgroup");
  std::vector<bool> placed(g.order(), false);
  std::vector<GroupSubset> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (placed[x]) continue;
    std::vector<Element> c;
    for (Element y : k) c.push_back(side == CosetSide::Left ? g.op(x, y) : g.op(y, x));
    for (Element e : c) placed[e] = true;
    out.emplace_back(std::move(c));
  }
  return out;
}

bool is_normal_subset(const FiniteGroup& g, const GroupSubset& h) {
  check_subset(g, h);
  // gH = Hg  <=>  g^-1 H g = H
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : h)
      if (!h.contains(g.conjugate(y, x))) return false;
  return true;
}

Quotient quotient_group(const FiniteGroup& g, const GroupSubset& k) {
  if (!is_subgroup(g, k)) throw InputError("quotient_group: K is not a subgroup");
  if (!is_normal_subset(g, k)) throw InputError("quotient_group: K is not normal");
  Quotient q;
  q.cosets = cosets(g, k, CosetSide::Left);
  q.projection.assign(g.order(), 0);
  for (std::size_t i = 0; i < q.cosets.size(); ++i)
    for (Element e : q.cosets[i]) q.projection[e] = i;
  const std::size_t m = q.cosets.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a][b] = q.projection[g.op(q.cosets[a].members()[0], q.cosets[b].members()[0])];
  q.group = FiniteGroup::from_table(t);
  return q;
}

// ---------------------------------------------------------------------------

bool CharacterTable::complete(const FiniteGroup& g) const {
  std::size_t s = 0;
  for (const auto& c : characters) s += c.degree * c.degree;
  return s == g.order();
}

CharacterTable cyclic_character_table(std::size_t n) {
  if (n == 0) throw InputError("cyclic_character_table: n must be positive");
  CharacterTable t;
  t.conductor = n;
  for (std::size_t i = 0; i < n; ++i) {
    Character c;
    for (std::size_t m = 0; m < n; ++m)
      c.values.push_back(CycloNum::root_of_unity(n, static_cast<long long>((i * m) % n)));
    t.characters.push_back(std::move(c));
  }
  return t;
}

CycloNum class_inner_product(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
  if (a.size() != b.size() || a.empty())
    throw InputError("inner product: length mismatch (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  CycloNum s(a[0].conductor());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conjugate();
  s /= Rational(static_cast<long>(a.size()));
  return s;
}

void validate_character_table(const CharacterTable& t, const FiniteGroup& g) {
  if (t.characters.empty()) throw InputError("character table has no characters");
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    const auto& c = t.characters[i];
    const std::string tag = "character " + std::to_string(i) + ": ";
    if (c.values.size() != g.order())
      throw InputError(tag + "has " + std::to_string(c.values.size()) + " values, group has " +
                       std::to_string(g.order()) + " elements");
    if (c.degree == 0) throw InputError(tag + "degree must be positive");
    if (!(c.values[0] == CycloNum(1, Rational(static_cast<long>(c.degree)))))
      throw InputError(tag + "value at the identity is " + c.values[0].to_string() + ", degree is " +
                       std::to_string(c.degree));
    for (const auto& cls : g.conjugacy_classes())
      for (Element e : cls)
        if (!(c.values[e] == c.values[cls[0]]))
          throw InputError(tag + "not constant on the conjugacy class of element " + std::to_string(cls[0]));
  }
  for (std::size_t e = 0; e < g.order(); ++e)
    if (!(t.characters[0].values[e] == CycloNum(1, Rational(1))))
      throw InputError("character 0: the first character must be trivial");
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    for (std::size_t j = i; j < t.characters.size(); ++j) {
      const CycloNum ip = class_inner_product(t.characters[i].values, t.characters[j].values);
      const CycloNum want(1, Rational(i == j ? 1 : 0));
      if (!(ip == want))
        throw InputError("character " + std::to_string(i) + ": row orthogonality fails against character " +
                         std::to_string(j) + " (inner product " + ip.to_string() + ")");
    }
  std::size_t s = 0;
  for (const auto& c : t.characters) s += c.degree * c.degree;
  if (s > g.order()) throw InputError("character table: sum of squared degrees exceeds the group order");
}

CharacterTable parse_character_table(const nlohmann::json& doc, const FiniteGroup& g) {
  if (!doc.is_object()) throw InputError("character table document must be a JSON object");
  CharacterTable t;
  if (doc.contains("cyclic")) {
    if (!doc["cyclic"].is_number_unsigned()) throw InputError("\"cyclic\" must be a positive integer");
    t = cyclic_character_table(doc["cyclic"].get<std::size_t>());
  } else {
    if (!doc.contains("conductor") || !doc["conductor"].is_number_unsigned() ||
        doc["conductor"].get<std::size_t>() == 0)
      throw InputError("character table needs a positive integer \"conductor\"");
    if (!doc.contains("characters") || !doc["characters"].is_array())
      throw InputError("character table needs a \"characters\" array");
    t.conductor = doc["conductor"].get<std::size_t>();
    std::size_t idx = 0;
    for (const auto& cj : doc["characters"]) {
      const std::string tag = "character " + std::to_string(idx++) + ": ";
      if (!cj.is_object() || !cj.contains("degree") || !cj.contains("values") || !cj["values"].is_array() ||
          !cj["degree"].is_number_unsigned())
        throw InputError(tag + "needs \"degree\" and \"values\"");
      Character c;
      c.degree = cj["degree"].get<std::size_t>();
      for (const auto& v : cj["values"]) {
        CycloNum z;
        try {
          z = cyclo_from_json(v);
        } catch (const InputError& e) {
          throw InputError(tag + e.what());
        }
        if (t.conductor % z.conductor() != 0)
          throw InputError(tag + "value " + z.to_string() + " does not lie in Q(zeta_" +
                           std::to_string(t.conductor) + ")");
        c.values.push_back(z.lifted(t.conductor));
      }
      t.characters.push_back(std::move(c));
    }
  }
  validate_character_table(t, g);
  return t;
}

nlohmann::json to_json(const CharacterTable& t) {
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& c : t.characters) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : c.values) vals.push_back(to_json(v));
    chars.push_back({{"degree", c.degree}, {"values", vals}});
  }
  return {{"conductor", t.conductor}, {"characters", chars}};
}

}  // namespace sg
