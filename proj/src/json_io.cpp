#include "semicat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "semicat/builtin.hpp"
#include "semicat/constructions.hpp"
#include "semicat/errors.hpp"

namespace semicat {

namespace {

Json const& field(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(Json const& j, char const* key) {
  auto const& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_vector(Json const& v, char const* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (auto const& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_matrix(Json const& v, char const* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (auto const& row : v) out.push_back(int_vector(row, what));
  return out;
}

}  // namespace

Json semigroup_to_json(FiniteSemigroup const& s) {
  Json j;
  j["order"] = s.order();
  auto rows = Json::array();
  for (int a = 0; a < s.order(); ++a) {
    auto row = Json::array();
    for (int b = 0; b < s.order(); ++b) row.push_back(s.product(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (!s.names().empty()) j["names"] = s.names();
  if (s.zero()) j["zero"] = *s.zero();
  if (s.identity()) j["identity"] = *s.identity();
  return j;
}

FiniteSemigroup semigroup_from_json(Json const& j) {
  int const order = int_field(j, "order");
  auto table = int_matrix(field(j, "table"), "table");
  if (static_cast<int>(table.size()) != order)
    throw InputError("declared order disagrees with the table");
  std::vector<std::string> names;
  if (j.contains("names")) {
    auto const& v = j.at("names");
    if (!v.is_array()) throw InputError("names must be an array of strings");
    for (auto const& x : v) {
      if (!x.is_string()) throw InputError("names must be an array of strings");
      names.push_back(x.get<std::string>());
    }
  }
  auto s = FiniteSemigroup::from_table(table, std::move(names));
  if (j.contains("zero") && (!s.zero() || *s.zero() != int_field(j, "zero")))
    throw InputError("declared zero disagrees with the table");
  if (j.contains("identity") && (!s.identity() || *s.identity() != int_field(j, "identity")))
    throw InputError("declared identity disagrees with the table");
  return s;
}

Json partition_to_json(Partition const& p) { return Json(p.assignment()); }

Partition partition_from_json(Json const& j) {
  return Partition::from_assignment(int_vector(j, "partition"));
}

Json orbit_report_to_json(OrbitReport const& r) {
  Json j;
  j["n"] = r.n;
  j["group"] = r.group;
  j["orbit_count"] = r.orbit_count;
  j["representatives"] = r.representatives;
  return j;
}

Json aut_group_to_json(AutGroup const& g) {
  Json j;
  j["order"] = g.order();
  auto gens = Json::array();
  for (auto const& p : g.generators()) gens.push_back(p.img);
  j["generators"] = std::move(gens);
  return j;
}

namespace {

Json eggbox_json(FiniteSemigroup const& s, GreenStructure const& gs) {
  auto classes = Json::array();
  for (auto const& dclass : gs.D.blocks()) {
    int const id = gs.J.block_of(dclass.front());
    Json c;
    c["elements"] = dclass;
    c["contains_idempotent"] = gs.j_info[static_cast<size_t>(id)].contains_idempotent;
    c["is_kernel"] = gs.j_info[static_cast<size_t>(id)].is_kernel;

    // rows are the R-classes, columns the L-classes, both by least member
    std::vector<int> row_ids, col_ids;
    for (int x : dclass) {
      if (std::find(row_ids.begin(), row_ids.end(), gs.R.block_of(x)) == row_ids.end())
        row_ids.push_back(gs.R.block_of(x));
      if (std::find(col_ids.begin(), col_ids.end(), gs.L.block_of(x)) == col_ids.end())
        col_ids.push_back(gs.L.block_of(x));
    }
    auto grid = Json::array();
    auto idem = Json::array();
    for (int r : row_ids) {
      auto grow = Json::array();
      auto irow = Json::array();
      for (int l : col_ids) {
        std::vector<int> cell;
        bool has = false;
        for (int x : dclass)
          if (gs.R.block_of(x) == r && gs.L.block_of(x) == l) {
            cell.push_back(x);
            if (s.product(x, x) == x) has = true;
          }
        grow.push_back(cell);
        irow.push_back(has);
      }
      grid.push_back(std::move(grow));
      idem.push_back(std::move(irow));
    }
    c["grid"] = std::move(grid);
    c["idempotent_cells"] = std::move(idem);
    classes.push_back(std::move(c));
  }
  Json j;
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace

Json analysis_to_json(FiniteSemigroup const& s, bool with_eggbox) {
  Json j;
  j["order"] = s.order();
  j["is_commutative"] = is_commutative(s);
  j["is_band"] = is_band(s);
  j["is_semilattice"] = is_semilattice(s);
  j["is_regular"] = is_regular_semigroup(s);
  j["is_inverse"] = is_inverse(s);
  j["is_group"] = is_group(s);
  j["is_monoid"] = is_monoid(s);
  if (is_inverse(s)) j["is_e_unitary"] = is_e_unitary(s);
  if (s.zero()) j["zero"] = *s.zero();
  if (s.identity()) j["identity"] = *s.identity();
  j["idempotents"] = idempotents(s);
  auto gs = green_relations(s);
  Json green;
  green["r_classes"] = gs.R.n_blocks();
  green["l_classes"] = gs.L.n_blocks();
  green["h_classes"] = gs.H.n_blocks();
  green["d_classes"] = gs.D.n_blocks();
  green["j_classes"] = gs.J.n_blocks();
  j["green"] = std::move(green);
  if (with_eggbox) j["eggbox"] = eggbox_json(s, gs);
  return j;
}

Json decomposition_to_json(FiniteSemigroup const& s, ZeroDecomposition const& d) {
  Json j;
  j["summands"] = d.summands;
  auto indec = Json::array();
  for (auto const& part : d.summands)
    indec.push_back(is_zero_directly_indecomposable(subsemigroup(s, part)));
  j["indecomposable"] = std::move(indec);
  j["primitive"] = is_primitive(s);
  return j;
}

Json family_report_to_json(FamilyReport const& r) {
  Json j;
  j["family"] = r.spec.family;
  j["from"] = r.spec.from;
  j["to"] = r.spec.to;
  j["statistic"] = r.spec.statistic;
  if (r.spec.statistic == "orbit_count") j["n"] = r.spec.n;
  if (r.spec.family == "brandt" || r.spec.family == "direct_power")
    j["base"] = r.spec.base;
  auto rows = Json::array();
  for (auto const& row : r.rows) {
    Json entry;
    entry["parameter"] = row.parameter;
    entry["value"] = row.value;
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  j["label"] = r.label;
  j["note"] = r.note;
  return j;
}

Json verify_report_to_json(VerifyReport const& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["checks"] = r.checks;
  auto failures = Json::array();
  for (auto const& f : r.failures) {
    Json entry;
    entry["instance"] = f.instance;
    entry["message"] = f.message;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["ok"] = r.ok();
  return j;
}

namespace {

FiniteSemigroup resolve_semigroup(Json const& j);

std::vector<FiniteSemigroup> parts_arg(Json const& args) {
  auto const& v = field(args, "parts");
  if (!v.is_array() || v.empty()) throw InputError("parts must be a non-empty array");
  std::vector<FiniteSemigroup> out;
  for (auto const& p : v) out.push_back(resolve_semigroup(p));
  return out;
}

FiniteSemigroup build_from_recipe(Json const& recipe) {
  auto const& name = field(recipe, "construct");
  if (!name.is_string()) throw InputError("construct must name a builder");
  auto const& args = field(recipe, "args");
  std::string const kind = name.get<std::string>();

  if (kind == "null") return null_semigroup(int_field(args, "m"));
  if (kind == "boolean_zs") return boolean_zs(int_field(args, "m"));
  if (kind == "example_c") return example_c(int_field(args, "m"));
  if (kind == "chain") return chain_of_semigroups(parts_arg(args));
  if (kind == "product") return direct_product(parts_arg(args));
  if (kind == "zero_union") return zero_direct_union(parts_arg(args));
  if (kind == "brandt")
    return brandt(resolve_semigroup(field(args, "group")), int_field(args, "m"));
  if (kind == "semidirect") {
    SemidirectData d;
    d.s = resolve_semigroup(field(args, "s"));
    d.t = resolve_semigroup(field(args, "t"));
    d.action = int_matrix(field(args, "action"), "action");
    return semidirect_product(d);
  }
  if (kind == "p_semigroup") {
    auto group = resolve_semigroup(field(args, "group"));
    auto poset = FinitePoset::from_matrix(int_matrix(field(args, "poset"), "poset"));
    auto ideal = int_vector(field(args, "ideal"), "ideal");
    auto action = int_matrix(field(args, "action"), "action");
    return p_semigroup(make_triple(std::move(group), std::move(poset), std::move(ideal),
                                   std::move(action)));
  }
  throw InputError("unknown construct: " + kind);
}

FiniteSemigroup resolve_semigroup(Json const& j) {
  if (!j.is_object()) throw InputError("semigroup argument must be an object");
  if (j.contains("builtin")) {
    auto const& name = j.at("builtin");
    if (!name.is_string()) throw InputError("builtin must be a name");
    return builtin_semigroup(name.get<std::string>());
  }
  if (j.contains("construct")) return build_from_recipe(j);
  if (j.contains("table")) return semigroup_from_json(j);
  throw InputError("expected a recipe, a builtin reference or an inline table");
}

}  // namespace

FiniteSemigroup semigroup_from_recipe(Json const& recipe) { return resolve_semigroup(recipe); }

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  auto j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError("invalid JSON in " + path);
  return j;
}

void write_json_file(std::string const& path, Json const& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump_json(j);
}

std::string dump_json(Json const& j) { return j.dump(2) + "\n"; }

}  // namespace semicat
