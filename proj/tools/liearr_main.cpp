// liearr: exact-arithmetic Lie algebras of set-arrangements.
//
// Subcommands: flats, dims, check, partial. Exit codes: 0 success (or
// "decomposes"), 1 does not decompose, 2 input error, 3 undecidable at the
// chosen truncation degree.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liearr/decompose.hpp"
#include "liearr/field.hpp"

using namespace liearr;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<Field> parse_fields(const std::string& field_opt, const std::string& all_fields) {
  std::vector<Field> fields;
  if (!all_fields.empty()) {
    std::stringstream ss(all_fields);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(parse_field(item));
    if (fields.empty()) throw InputError("empty --all-fields list");
  } else {
    fields.push_back(parse_field(field_opt.empty() ? "q" : field_opt));
  }
  return fields;
}

template <class Fn>
auto with_field(const Field& field, Fn&& fn) {
  if (field.kind() == Field::Kind::Rationals) return fn(RationalField{});
  return fn(PrimeField{field.characteristic()});
}

// ---------------------------------------------------------------------------

int cmd_flats(const std::string& path, const std::string& format) {
  auto spec = parse_arrangement_file(slurp(path));
  auto asmb = assemble(spec);
  SetArrangement flats = [&] {
    if (asmb.from_normals) return asmb.arrangement;  // already the 2-flats
    auto completed = complete_arrangement(asmb.arrangement);
    return two_flats(Matroid3::from_arrangement(completed));
  }();

  if (format == "structured") {
    nlohmann::ordered_json j;
    j["command"] = "flats";
    j["ground"] = flats.ground();
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& b : flats.blocks()) {
      nlohmann::ordered_json e;
      e["label"] = b.label;
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (int m : b.members) members.push_back(flats.name(m));
      e["members"] = std::move(members);
      e["commuting_pair"] = b.commuting_pair;
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  // Plain output is itself a valid arrangement file.
  std::cout << "# arrangement: " << asmb.arrangement.blocks().size() << " block(s)";
  if (asmb.from_normals) std::cout << " derived from normal vectors";
  std::cout << "\n# 2-flats: " << flats.blocks().size() << " block(s)\n";
  std::cout << "ground:";
  for (const auto& n : flats.ground()) std::cout << " " << n;
  std::cout << "\n";
  for (const auto& b : flats.blocks()) {
    std::cout << "block " << b.label << ":";
    for (int m : b.members) std::cout << " " << flats.name(m);
    if (b.commuting_pair) std::cout << "  # commuting pair";
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_dims(const std::string& path, int max_degree, const std::string& field_opt,
             const std::string& all_fields, const std::string& format) {
  auto asmb = assemble(parse_arrangement_file(slurp(path)));
  if (max_degree == 0) max_degree = 6;
  if (max_degree < 2) throw InputError("--max-degree must be >= 2");
  auto fields = parse_fields(field_opt, all_fields);

  std::vector<std::pair<std::string, DimSeries>> results;
  std::vector<std::string> warnings;
  for (const auto& field : fields) {
    auto series = with_field(field, [&](auto f) {
      GradedQuotient<decltype(f)> q(f, asmb.presentation, max_degree);
      for (const auto& w : q.warnings()) warnings.push_back(w);
      return q.dim_series();
    });
    results.emplace_back(field.name(), std::move(series));
  }
  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i)
    for (int d = 0; d < max_degree; ++d)
      if (results[i].second[static_cast<std::size_t>(d)].dim !=
              results[0].second[static_cast<std::size_t>(d)].dim ||
          results[i].second[static_cast<std::size_t>(d)].derived_dim !=
              results[0].second[static_cast<std::size_t>(d)].derived_dim)
        agree = false;

  if (format == "structured") {
    nlohmann::ordered_json j;
    j["command"] = "dims";
    j["max_degree"] = max_degree;
    nlohmann::ordered_json fj = nlohmann::ordered_json::array();
    for (const auto& [name, series] : results) {
      nlohmann::ordered_json e;
      e["field"] = name;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : series) {
        nlohmann::ordered_json row;
        row["degree"] = r.degree;
        row["dim"] = r.dim;
        row["derived"] = r.derived_dim;
        rows.push_back(std::move(row));
      }
      e["rows"] = std::move(rows);
      fj.push_back(std::move(e));
    }
    j["fields"] = std::move(fj);
    j["fields_agree"] = agree;
    j["warnings"] = warnings;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "degree";
    for (const auto& [name, series] : results) std::cout << "  dim(" << name << ")  der(" << name << ")";
    std::cout << "\n";
    for (int d = 1; d <= max_degree; ++d) {
      std::cout << d;
      for (const auto& [name, series] : results) {
        const auto& r = series[static_cast<std::size_t>(d - 1)];
        std::cout << "  " << r.dim << "  " << r.derived_dim;
      }
      std::cout << "\n";
    }
    if (results.size() > 1)
      std::cout << "fields agree: " << (agree ? "yes" : "NO (possible torsion)") << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return warnings.empty() ? 0 : 3;
}

// ---------------------------------------------------------------------------

struct PartitionChoice {
  std::vector<std::vector<int>> groups;
  std::vector<std::string> names;
};

PartitionChoice resolve_partition(const Assembled& asmb,
                                  const std::vector<std::string>& partition_opts,
                                  bool singletons_flag, bool singletons_rest) {
  const auto& arr = asmb.arrangement;
  PartitionChoice out;
  if (singletons_flag && !partition_opts.empty())
    throw InputError("--singletons conflicts with --partition");

  if (singletons_flag) {
    for (int b = 0; b < static_cast<int>(arr.blocks().size()); ++b) {
      out.groups.push_back({b});
      out.names.push_back(arr.blocks()[static_cast<std::size_t>(b)].label);
    }
    return out;
  }
  if (!partition_opts.empty()) {
    for (const auto& opt : partition_opts) {
      auto eq = opt.find('=');
      if (eq == std::string::npos)
        throw InputError("--partition expects NAME=label,label,...  got '" + opt + "'");
      std::string name = opt.substr(0, eq);
      std::vector<int> group;
      std::stringstream ss(opt.substr(eq + 1));
      std::string label;
      while (std::getline(ss, label, ',')) {
        int b = arr.block_index_of_label(label);
        if (b < 0) throw InputError("unknown block label '" + label + "' in --partition");
        group.push_back(b);
      }
      if (group.empty()) throw InputError("empty group in --partition");
      out.groups.push_back(std::move(group));
      out.names.push_back(std::move(name));
    }
  } else {
    out.groups = asmb.groups;
    out.names = asmb.group_names;
    singletons_rest = true;  // file groups follow the singletons-rest convention
    if (out.groups.empty()) {
      for (int b = 0; b < static_cast<int>(arr.blocks().size()); ++b) {
        out.groups.push_back({b});
        out.names.push_back(arr.blocks()[static_cast<std::size_t>(b)].label);
      }
      return out;
    }
  }
  if (singletons_rest) {
    std::vector<bool> used(arr.blocks().size(), false);
    for (const auto& g : out.groups)
      for (int b : g)
        if (b >= 0 && b < static_cast<int>(arr.blocks().size()))
          used[static_cast<std::size_t>(b)] = true;
    for (int b = 0; b < static_cast<int>(arr.blocks().size()); ++b)
      if (!used[static_cast<std::size_t>(b)]) {
        out.groups.push_back({b});
        out.names.push_back(arr.blocks()[static_cast<std::size_t>(b)].label);
      }
  }
  return out;
}

int default_check_degree(const Presentation& pres) {
  int d = 2 * pres.gens().max_degree() + std::max(pres.max_relation_degree(), 2);
  return std::max(6, d);
}

int cmd_check(const std::string& path, int max_degree, const std::string& field_opt,
              const std::string& all_fields, const std::vector<std::string>& partition_opts,
              bool singletons_flag, bool singletons_rest, int jobs, const std::string& format) {
  auto asmb = assemble(parse_arrangement_file(slurp(path)));
  if (max_degree == 0) max_degree = default_check_degree(asmb.presentation);
  if (max_degree < 2) throw InputError("--max-degree must be >= 2");
  auto choice = resolve_partition(asmb, partition_opts, singletons_flag, singletons_rest);
  auto fields = parse_fields(field_opt, all_fields);

  std::vector<DecompositionReport> reports;
  for (const auto& field : fields)
    reports.push_back(with_field(field, [&](auto f) {
      return verify_decomposition(f, asmb.presentation, choice.groups, choice.names, max_degree,
                                  jobs);
    }));
  bool agree = true;
  for (std::size_t i = 1; i < reports.size(); ++i)
    if (reports[i].verdict != reports[0].verdict || reports[i].zero != reports[0].zero ||
        reports[i].checked != reports[0].checked)
      agree = false;

  if (format == "structured") {
    if (reports.size() == 1) {
      std::cout << reports[0].to_structured() << "\n";
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : reports) j.push_back(nlohmann::ordered_json::parse(r.to_structured()));
      nlohmann::ordered_json wrap;
      wrap["command"] = "check";
      wrap["fields_agree"] = agree;
      wrap["runs"] = std::move(j);
      std::cout << wrap.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << reports[i].to_text();
    }
    if (reports.size() > 1)
      std::cout << "fields agree: " << (agree ? "yes" : "NO (possible torsion)") << "\n";
  }
  int code = 0;
  for (const auto& r : reports) code = std::max(code, verdict_exit_code(r.verdict));
  return code;
}

int cmd_partial(const std::string& path, const std::string& sub_opt, int max_degree,
                const std::string& field_opt, const std::string& all_fields, int jobs,
                const std::string& format) {
  auto asmb = assemble(parse_arrangement_file(slurp(path)));
  if (max_degree == 0) max_degree = default_check_degree(asmb.presentation);
  if (max_degree < 2) throw InputError("--max-degree must be >= 2");
  if (sub_opt.empty()) throw InputError("--sub label,label,... is required");
  std::vector<int> members;
  {
    std::stringstream ss(sub_opt);
    std::string label;
    while (std::getline(ss, label, ',')) {
      int b = asmb.arrangement.block_index_of_label(label);
      if (b < 0) throw InputError("unknown block label '" + label + "' in --sub");
      members.push_back(b);
    }
  }
  auto fields = parse_fields(field_opt, all_fields);
  std::vector<PartialReport> reports;
  for (const auto& field : fields)
    reports.push_back(with_field(field, [&](auto f) {
      return partial_decomposition(f, asmb.presentation, members, max_degree, jobs);
    }));

  if (format == "structured") {
    if (reports.size() == 1) {
      std::cout << reports[0].to_structured() << "\n";
    } else {
      nlohmann::ordered_json wrap;
      wrap["command"] = "partial";
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : reports) j.push_back(nlohmann::ordered_json::parse(r.to_structured()));
      wrap["runs"] = std::move(j);
      std::cout << wrap.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << reports[i].to_text();
    }
  }
  int code = 0;
  for (const auto& r : reports) code = std::max(code, verdict_exit_code(r.verdict));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Lie algebras of set-arrangements: graded dimensions and "
               "direct-sum decompositions of the derived algebra"};
  app.require_subcommand(1);

  std::string file, field_opt, all_fields, format = "text", sub_opt;
  std::vector<std::string> partition_opts;
  int max_degree = 0, jobs = 1;
  bool singletons_flag = false, singletons_rest = false;

  auto add_common = [&](CLI::App* cmd, bool with_field_opts) {
    cmd->add_option("file", file, "arrangement file")->required();
    cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    if (with_field_opts) {
      cmd->add_option("-d,--max-degree", max_degree, "truncation degree");
      cmd->add_option("--field", field_opt, "q or p:<prime>");
      cmd->add_option("--all-fields", all_fields, "comma-separated fields, e.g. q,2,3,101");
    }
  };

  auto* flats = app.add_subcommand("flats", "print the arrangement's 2-flats");
  add_common(flats, false);

  auto* dims = app.add_subcommand("dims", "graded dimensions of L and its derived algebra");
  add_common(dims, true);

  auto* check = app.add_subcommand("check", "decide decomposition for a partition");
  add_common(check, true);
  check->add_option("--partition", partition_opts,
                    "named group of block labels, NAME=l1,l2,... (repeatable)");
  check->add_flag("--singletons", singletons_flag, "partition into singleton blocks");
  check->add_flag("--singletons-rest", singletons_rest,
                  "blocks not named in --partition become singletons");
  check->add_option("--jobs", jobs, "parallel triple checks");

  auto* partial = app.add_subcommand("partial", "split off one closed sub-arrangement");
  add_common(partial, true);
  partial->add_option("--sub", sub_opt, "block labels of the sub-arrangement, l1,l2,...")
      ->required();
  partial->add_option("--jobs", jobs, "parallel triple checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (flats->parsed()) return cmd_flats(file, format);
    if (dims->parsed()) return cmd_dims(file, max_degree, field_opt, all_fields, format);
    if (check->parsed())
      return cmd_check(file, max_degree, field_opt, all_fields, partition_opts, singletons_flag,
                       singletons_rest, jobs, format);
    if (partial->parsed())
      return cmd_partial(file, sub_opt, max_degree, field_opt, all_fields, jobs, format);
  } catch (const UndecidableAtDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
