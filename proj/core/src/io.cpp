#include "equichain/io.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "equichain/errors.hpp"

namespace equichain {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(where + ": missing field '" + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InvalidInput(where + ": expected an integer");
  return v.get<int>();
}

Integer as_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw InvalidInput(where + ": expected an integer coefficient");
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

GroupRef group_from_json(const json& j, const std::string& where) {
  GroupRef g;
  if (j.is_string()) {
    g.spec = j.get<std::string>();
    if (!group_from_spec(g.spec)) throw InvalidInput(where + ": unknown group '" + g.spec + "'");
    return g;
  }
  const int order = as_int(field(j, "order", where), where + ".order");
  g.identity = as_int(field(j, "identity", where), where + ".identity");
  const json& mul = field(j, "mul", where);
  if (!mul.is_array() || static_cast<int>(mul.size()) != order)
    throw InvalidInput(where + ".mul: expected " + std::to_string(order) + " rows");
  for (std::size_t a = 0; a < mul.size(); ++a) {
    const std::string row_where = where + ".mul[" + std::to_string(a) + "]";
    if (!mul[a].is_array()) throw InvalidInput(row_where + ": expected an array");
    std::vector<int> row;
    for (const auto& v : mul[a]) row.push_back(as_int(v, row_where));
    g.table.push_back(std::move(row));
  }
  GroupTableCheck check = check_group_table(g.table, g.identity);
  if (!check.ok) throw ValidationError("group table: " + check.message);
  return g;
}

json group_to_json(const GroupRef& g) {
  if (!g.spec.empty()) return g.spec;
  return json{{"order", g.table.size()}, {"mul", g.table}, {"identity", g.identity}};
}

EntryTerms normalize(const EntryTerms& terms) {
  std::map<int, Integer> merged;
  for (const auto& [c, g] : terms) merged[g] += c;
  EntryTerms out;
  for (const auto& [g, c] : merged)
    if (c != 0) out.emplace_back(c, g);
  return out;
}

}  // namespace

GroupRef parse_group_document(const std::string& json_text) { return group_from_json(parse_text(json_text), "group"); }

std::string serialize_group(const GroupRef& group) { return group_to_json(group).dump(2); }

GroupRef group_ref(const std::string& spec) {
  if (!group_from_spec(spec)) throw InvalidInput("unknown group '" + spec + "'");
  return GroupRef{spec, {}, 0};
}

GroupPtr resolve_group(const GroupRef& group) {
  if (!group.spec.empty()) {
    auto g = group_from_spec(group.spec);
    if (!g) throw InvalidInput("unknown group '" + group.spec + "'");
    return std::make_shared<const FiniteGroup>(std::move(*g));
  }
  GroupTableCheck check = check_group_table(group.table, group.identity);
  if (!check.ok) throw ValidationError("group table: " + check.message);
  return std::make_shared<const FiniteGroup>(group.table, group.identity);
}

ComplexDocument parse_complex_document(const std::string& json_text) {
  json j = parse_text(json_text);
  ComplexDocument doc;
  doc.group = group_from_json(field(j, "group", "complex"), "complex.group");
  const int order = doc.group.spec.empty() ? static_cast<int>(doc.group.table.size())
                                           : group_from_spec(doc.group.spec)->order();
  doc.name = j.value("name", std::string("complex"));
  const json& degrees = field(j, "degrees", "complex");
  if (!degrees.is_array() || degrees.empty()) throw InvalidInput("complex.degrees: expected a non-empty array");
  for (std::size_t n = 0; n < degrees.size(); ++n) {
    const std::string where = "complex.degrees[" + std::to_string(n) + "]";
    const int rank = as_int(field(degrees[n], "rank", where), where + ".rank");
    if (rank < 0) throw InvalidInput(where + ".rank: must be non-negative");
    doc.ranks.push_back(rank);
    std::vector<std::vector<EntryTerms>> matrix;
    if (n > 0) {
      const int rows = doc.ranks[n - 1];
      // An absent differential is the zero map.
      const bool given = degrees[n].contains("differential");
      const json d = given ? degrees[n].at("differential") : json::array();
      if (!d.is_array() || (given && static_cast<int>(d.size()) != rows))
        throw InvalidInput(where + ".differential: expected " + std::to_string(rows) + " rows");
      matrix.assign(rows, std::vector<EntryTerms>(rank));
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_array() || static_cast<int>(d[i].size()) != rank)
          throw InvalidInput(where + ".differential[" + std::to_string(i) + "]: expected " + std::to_string(rank) +
                             " entries");
        for (int c = 0; c < rank; ++c) {
          const std::string ew = where + ".differential[" + std::to_string(i) + "][" + std::to_string(c) + "]";
          const json& entry = d[i][c];
          if (!entry.is_array()) throw InvalidInput(ew + ": expected a list of [coefficient, element] pairs");
          EntryTerms terms;
          for (const auto& pair : entry) {
            if (!pair.is_array() || pair.size() != 2) throw InvalidInput(ew + ": expected [coefficient, element]");
            const int g = as_int(pair[1], ew);
            if (g < 0 || g >= order) throw InvalidInput(ew + ": group element " + std::to_string(g) + " out of range");
            terms.emplace_back(as_integer(pair[0], ew), g);
          }
          matrix[i][c] = normalize(terms);
        }
      }
    } else if (degrees[0].contains("differential") && !degrees[0].at("differential").empty()) {
      throw InvalidInput(where + ".differential: degree 0 has no differential");
    }
    doc.differentials.push_back(std::move(matrix));
  }
  return doc;
}

std::string serialize_complex(const ComplexDocument& doc) {
  json degrees = json::array();
  for (std::size_t n = 0; n < doc.ranks.size(); ++n) {
    json deg{{"rank", doc.ranks[n]}};
    if (n > 0) {
      json rows = json::array();
      for (const auto& row : doc.differentials[n]) {
        json r = json::array();
        for (const auto& entry : row) {
          json e = json::array();
          for (const auto& [c, g] : entry) e.push_back(json::array({integer_json(c), g}));
          r.push_back(std::move(e));
        }
        rows.push_back(std::move(r));
      }
      deg["differential"] = std::move(rows);
    }
    degrees.push_back(std::move(deg));
  }
  json j{{"group", group_to_json(doc.group)}, {"name", doc.name}, {"degrees", std::move(degrees)}};
  return j.dump(2);
}

std::shared_ptr<FreeModuleComplex> build_complex(const ComplexDocument& doc) {
  GroupPtr group = resolve_group(doc.group);
  auto ring = std::make_shared<const Dga>(Dga::group_ring(group));
  std::vector<std::vector<std::vector<RingElement>>> entries(doc.ranks.size());
  for (std::size_t n = 1; n < doc.ranks.size(); ++n) {
    const int rows = doc.ranks[n - 1], cols = doc.ranks[n];
    entries[n].assign(rows, std::vector<RingElement>(cols));
    for (int i = 0; i < rows && i < static_cast<int>(doc.differentials[n].size()); ++i)
      for (int j = 0; j < cols; ++j)
        for (const auto& [c, g] : doc.differentials[n][i][j]) entries[n][i][j] += c * RingElement(g);
  }
  auto complex = std::make_shared<FreeModuleComplex>(ring, doc.ranks, entries, doc.name);
  if (auto err = complex->check_square_zero()) throw ValidationError(doc.name + ": " + *err);
  return complex;
}

ComplexDocument document_from_complex(const ChainComplex& complex, int top, const GroupRef& group) {
  if (complex.ring() == nullptr) throw InvalidInput(complex.name() + " is not a module complex");
  ComplexDocument doc;
  doc.group = group;
  doc.name = complex.name();
  std::vector<std::map<Cell, int>> index;
  for (int n = 0; n <= top; ++n) {
    std::map<Cell, int> idx;
    for (const auto& b : complex.module_basis(n)) idx.emplace(b, static_cast<int>(idx.size()));
    doc.ranks.push_back(static_cast<int>(idx.size()));
    std::vector<std::vector<EntryTerms>> matrix;
    if (n > 0) {
      matrix.assign(doc.ranks[n - 1], std::vector<EntryTerms>(doc.ranks[n]));
      for (const auto& [b, col] : idx)
        for (const auto& [cell, c] : complex.boundary(b)) {
          ModuleSplit s = complex.split(cell);
          auto it = index[n - 1].find(s.basis);
          if (it == index[n - 1].end()) throw InvalidInput("boundary leaves the module basis");
          matrix[it->second][col].emplace_back(c * s.sign, s.generator);
        }
      for (auto& row : matrix)
        for (auto& e : row) e = normalize(e);
    }
    doc.differentials.push_back(std::move(matrix));
    index.push_back(std::move(idx));
  }
  return doc;
}

std::optional<ExampleInput> builtin_example(const std::string& name) {
  auto number = [](const std::string& s) -> std::optional<int> {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (name.rfind("bar:", 0) == 0) {
    auto g = group_from_spec(name.substr(4));
    if (!g) return std::nullopt;
    ExampleInput ex = gen_bar_resolution(std::make_shared<const FiniteGroup>(std::move(*g)));
    ex.name = name;
    return ex;
  }
  if (name.rfind("lens:", 0) == 0) {
    const std::string rest = name.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto p = number(rest.substr(0, colon));
    auto k = number(rest.substr(colon + 1));
    if (!p || !k || *p < 2 || *k < 1) return std::nullopt;
    auto lens = gen_lens_complex(*p, *k);
    return ExampleInput{lens, trivial_equivalence(lens), name};
  }
  if (name.rfind("circle:", 0) == 0) {
    auto p = number(name.substr(7));
    if (!p || *p < 2) return std::nullopt;
    ExampleInput ex = gen_circle_example(*p);
    ex.name = name;
    return ex;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"bar:cyclic:<n>", "bar:symmetric:<n>", "lens:<p>:<k>", "circle:<p>"}; }

}  // namespace equichain
