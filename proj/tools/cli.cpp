#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "nearvec/closure.hpp"
#include "nearvec/ege.hpp"
#include "nearvec/element_codec.hpp"
#include "nearvec/error.hpp"
#include "nearvec/linmaps.hpp"
#include "nearvec/matrix_io.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/seed.hpp"
#include "nearvec/subgroups.hpp"

namespace nearvec::cli {
namespace {

using json = nlohmann::ordered_json;

// Signals a non-error outcome that still exits with code 1 after printing.
struct SoftFailure {
  std::string reason;
};

struct Context {
  std::ostream& out;
  std::istream& in;
  bool as_json = false;
  ElementStyle style = ElementStyle::polynomial;
};

std::string elem(const Nearfield& nf, Element a, ElementStyle style) {
  return format_element(nf, a, style);
}

json vector_json(const Nearfield& nf, std::span<const Element> v, ElementStyle style) {
  json out = json::array();
  for (Element a : v) out.push_back(elem(nf, a, style));
  return out;
}

json matrix_json(const Matrix& m, ElementStyle style) {
  json rows = json::array();
  for (const auto& r : m.row_list()) rows.push_back(vector_json(m.nf(), r, style));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json nf_json(const Nearfield& nf) { return json{{"q", nf.q()}, {"n", nf.n()}}; }

json document(const Nearfield& nf, json input, json result) {
  return json{{"nearfield", nf_json(nf)}, {"input", std::move(input)}, {"result", std::move(result)}};
}

void emit(Context& ctx, const json& doc) { ctx.out << doc.dump(2) << '\n'; }

std::string slurp(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

std::string read_text(Context& ctx, const std::string& path) {
  if (path == "-") return slurp(ctx.in);
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return slurp(f);
}

Matrix load_matrix(Context& ctx, const std::string& path) {
  return parse_matrix(read_text(ctx, path));
}

NearfieldPtr load_nf(std::int64_t q, std::int64_t n) {
  const PairVerdict v = validate_dickson_pair(q, n);
  if (!v.valid) throw Error(v.reason);
  return Nearfield::build(q, n);
}

std::string modulus_text(const Nearfield& nf) {
  std::string out;
  const auto& c = nf.modulus();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- commands ------------------------------------------------------------

void cmd_info(Context& ctx, std::int64_t q, std::int64_t n) {
  const auto nf = load_nf(q, n);
  const auto w = find_witness(*nf);
  json residues = nf->coset_residues();
  if (ctx.as_json) {
    json result{{"order", nf->order()},
                {"p", nf->p()},
                {"l", nf->l()},
                {"field", nf->is_field()},
                {"modulus", modulus_text(*nf)},
                {"generator", elem(*nf, nf->generator(), ctx.style)},
                {"coset_residues", residues}};
    if (w) {
      result["witness"] = {elem(*nf, w->alpha, ctx.style), elem(*nf, w->beta, ctx.style),
                           elem(*nf, w->lambda, ctx.style)};
    } else {
      result["witness"] = nullptr;
    }
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}}, result));
    return;
  }
  ctx.out << "DN(" << q << "," << n << ")\n"
          << "order " << nf->order() << "\n"
          << "p " << nf->p() << "\n"
          << "l " << nf->l() << "\n"
          << "field " << yes_no(nf->is_field()) << "\n"
          << "modulus " << modulus_text(*nf) << "\n"
          << "generator " << elem(*nf, nf->generator(), ctx.style) << "\n"
          << "coset_residues";
  for (auto r : nf->coset_residues()) ctx.out << ' ' << r;
  ctx.out << "\n";
  if (w) {
    ctx.out << "witness " << elem(*nf, w->alpha, ctx.style) << ' ' << elem(*nf, w->beta, ctx.style)
            << ' ' << elem(*nf, w->lambda, ctx.style) << "\n";
  } else {
    ctx.out << "witness none\n";
  }
}

void cmd_table(Context& ctx, std::int64_t q, std::int64_t n, const std::string& op) {
  const auto nf = load_nf(q, n);
  const auto table = op == "mul" ? mul_table(*nf) : add_table(*nf);
  std::vector<std::string> labels;
  for (std::uint32_t c = 0; c < nf->order(); ++c) labels.push_back(elem(*nf, Element{c}, ctx.style));
  if (ctx.as_json) {
    json rows = json::array();
    for (const auto& r : table) rows.push_back(vector_json(*nf, r, ctx.style));
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}, {"op", op}},
                       json{{"elements", labels}, {"table", rows}}));
    return;
  }
  std::size_t width = 1;
  for (const auto& s : labels) width = std::max(width, s.size());
  const auto cell = [&](const std::string& s) { ctx.out << std::setw(static_cast<int>(width) + 1) << s; };
  cell(op == "mul" ? "o" : "+");
  ctx.out << " |";
  for (const auto& s : labels) cell(s);
  ctx.out << "\n";
  for (std::size_t a = 0; a < table.size(); ++a) {
    cell(labels[a]);
    ctx.out << " |";
    for (Element b : table[a]) cell(elem(*nf, b, ctx.style));
    ctx.out << "\n";
  }
}

void cmd_witness(Context& ctx, std::int64_t q, std::int64_t n) {
  const auto nf = load_nf(q, n);
  const auto w = find_witness(*nf);
  if (!w) throw Error("field has no witness");
  const Element lhs = nf->mul(nf->add(w->alpha, w->beta), w->lambda);
  const Element rhs = nf->add(nf->mul(w->alpha, w->lambda), nf->mul(w->beta, w->lambda));
  if (ctx.as_json) {
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}},
                       json{{"alpha", elem(*nf, w->alpha, ctx.style)},
                            {"beta", elem(*nf, w->beta, ctx.style)},
                            {"lambda", elem(*nf, w->lambda, ctx.style)},
                            {"sum_times_lambda", elem(*nf, lhs, ctx.style)},
                            {"sum_of_products", elem(*nf, rhs, ctx.style)}}));
    return;
  }
  ctx.out << "alpha " << elem(*nf, w->alpha, ctx.style) << "\n"
          << "beta " << elem(*nf, w->beta, ctx.style) << "\n"
          << "lambda " << elem(*nf, w->lambda, ctx.style) << "\n"
          << "(alpha+beta)lambda " << elem(*nf, lhs, ctx.style) << "\n"
          << "alpha*lambda+beta*lambda " << elem(*nf, rhs, ctx.style) << "\n";
}

void print_decomposition(Context& ctx, const Matrix& input, const Matrix& basis, bool canonical,
                         const Trace* trace) {
  const Nearfield& nf = input.nf();
  if (ctx.as_json) {
    json doc = document(nf, matrix_json(input, ctx.style),
                        json{{"dimension", basis.rows()},
                             {"canonical", canonical},
                             {"basis", matrix_json(basis, ctx.style)}});
    if (trace) {
      json lines = json::array();
      std::istringstream is(format_trace(nf, *trace));
      for (std::string line; std::getline(is, line);) lines.push_back(line);
      doc["trace"] = lines;
    }
    emit(ctx, doc);
  } else {
    ctx.out << format_matrix(basis, ctx.style, {"dimension " + std::to_string(basis.rows())});
    if (trace) ctx.out << "# trace\n" << format_trace(nf, *trace);
  }
  if (!canonical) throw SoftFailure{"field has no witness"};
}

void cmd_ege(Context& ctx, const std::string& path, bool with_trace) {
  const Matrix m = load_matrix(ctx, path);
  const GenDecomposition dec = ege(m);
  print_decomposition(ctx, m, dec.basis, dec.canonical, with_trace ? &dec.trace : nullptr);
}

void cmd_replay(Context& ctx, const std::string& path, const std::string& trace_path) {
  const Matrix m = load_matrix(ctx, path);
  std::string text = read_text(ctx, trace_path);
  // Accept the full `ege --trace` output: keep only the lines after "# trace".
  const auto marker = text.find("# trace\n");
  if (marker != std::string::npos) text = text.substr(marker + 8);
  const Trace trace = parse_trace(m.nf(), text);
  const Matrix out = replay(m, trace);
  print_decomposition(ctx, m, out, columns_support_disjoint(out), nullptr);
}

void cmd_gen(Context& ctx, const std::string& path) {
  const Matrix m = load_matrix(ctx, path);
  const GenDecomposition dec = ege(m);
  const VectorSet g = gen_closure(make_set(m.nf_ptr(), m.cols(), m.row_list()));
  if (ctx.as_json) {
    emit(ctx, document(m.nf(), matrix_json(m, ctx.style),
                       json{{"size", g.size()},
                            {"space_size", g.space_size()},
                            {"dimension", dec.dimension},
                            {"full", g.is_full()}}));
    return;
  }
  ctx.out << "size " << g.size() << "\n"
          << "space_size " << g.space_size() << "\n"
          << "dimension " << dec.dimension << "\n"
          << "full " << yes_no(g.is_full()) << "\n";
}

void cmd_lc_index(Context& ctx, const std::string& path) {
  const Matrix m = load_matrix(ctx, path);
  const auto sizes = lc_strata_sizes(m.row_list(), m.nf_ptr(), m.cols());
  const std::uint64_t space = saturating_pow(m.nf().order(), m.cols());
  std::optional<std::size_t> index;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] == space) {
      index = p;
      break;
    }
  }
  if (ctx.as_json) {
    json result{{"strata", sizes}, {"space_size", space}};
    result["index"] = index ? json(*index) : json(nullptr);
    emit(ctx, document(m.nf(), matrix_json(m, ctx.style), result));
  } else {
    ctx.out << "strata";
    for (auto s : sizes) ctx.out << ' ' << s;
    ctx.out << "\n";
    if (index) ctx.out << "index " << *index << "\n";
  }
  if (!index) throw SoftFailure{"index undefined: gen ≠ R^m"};
}

void cmd_classify_map(Context& ctx, const std::string& path, bool semantic) {
  const MapRep t(load_matrix(ctx, path));
  const Nearfield& nf = t.nf();
  const MapClass cls = classify(t);
  const bool linear = is_linear(t, CheckMode::criterion);
  const bool bijective = is_bijective(t);
  json result{{"class", to_string(cls)}, {"linear", linear}};
  result["normal"] = linear ? json(is_normal(t, CheckMode::criterion)) : json(nullptr);
  result["bijective"] = bijective;
  std::optional<std::pair<Vector, Element>> violation;
  if (!linear) violation = find_linearity_violation(t);
  if (violation) {
    const Vector lhs = apply_map(t, scale_right(nf, violation->first, violation->second));
    const Vector rhs = scale_right(nf, apply_map(t, violation->first), violation->second);
    result["violation"] = {{"v", vector_json(nf, violation->first, ctx.style)},
                           {"r", elem(nf, violation->second, ctx.style)},
                           {"image_of_vr", vector_json(nf, lhs, ctx.style)},
                           {"image_of_v_times_r", vector_json(nf, rhs, ctx.style)}};
  }
  if (semantic) {
    const bool sem_linear = is_linear(t, CheckMode::semantic);
    result["semantic_linear"] = sem_linear;
    result["semantic_normal"] = sem_linear ? json(is_normal(t, CheckMode::semantic)) : json(nullptr);
  }
  if (ctx.as_json) {
    emit(ctx, document(nf, matrix_json(t.matrix(), ctx.style), result));
    return;
  }
  ctx.out << "class " << to_string(cls) << "\n"
          << "linear " << yes_no(linear) << "\n";
  if (linear) ctx.out << "normal " << yes_no(result["normal"].get<bool>()) << "\n";
  ctx.out << "bijective " << yes_no(bijective) << "\n";
  if (violation) {
    ctx.out << "violation v=" << format_vector(nf, violation->first, ctx.style)
            << " r=" << elem(nf, violation->second, ctx.style) << "\n"
            << "  T(v r) = " << format_vector(nf, apply_map(t, scale_right(nf, violation->first, violation->second)), ctx.style)
            << "\n"
            << "  T(v) r = " << format_vector(nf, scale_right(nf, apply_map(t, violation->first), violation->second), ctx.style)
            << "\n";
  }
  if (semantic) {
    ctx.out << "semantic_linear " << yes_no(result["semantic_linear"].get<bool>()) << "\n";
    if (result["semantic_linear"].get<bool>()) {
      ctx.out << "semantic_normal " << yes_no(result["semantic_normal"].get<bool>()) << "\n";
    }
  }
}

MapKind parse_kind(const std::string& s) {
  if (s == "all") return MapKind::all;
  if (s == "linear") return MapKind::linear;
  return MapKind::normal;
}

void cmd_count_maps(Context& ctx, std::int64_t q, std::int64_t n, std::size_t dim,
                    const std::string& kind_text, const std::string& method) {
  const auto nf = load_nf(q, n);
  const MapKind kind = parse_kind(kind_text);
  std::optional<std::uint64_t> closed;
  std::optional<std::uint64_t> enumerated;
  if (method != "enum") closed = count_maps_closed_form(*nf, dim, kind);
  if (method != "closed") enumerated = count_maps_enumerated(nf, dim, kind);
  if (ctx.as_json) {
    json result{{"kind", kind_text}};
    if (closed) result["closed_form"] = *closed;
    if (enumerated) result["enumerated"] = *enumerated;
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}, {"dim", dim}, {"kind", kind_text}}, result));
  } else if (closed && enumerated) {
    ctx.out << "closed_form " << *closed << "\n"
            << "enumerated " << *enumerated << "\n";
  } else {
    ctx.out << (closed ? *closed : *enumerated) << "\n";
  }
  if (closed && enumerated && *closed != *enumerated) {
    throw SoftFailure{"closed form and enumeration disagree"};
  }
}

void cmd_count_subgroups(Context& ctx, std::int64_t q, std::int64_t n, std::size_t m, std::size_t k,
                         bool enumerate, bool orbits) {
  const auto nf = load_nf(q, n);
  const std::uint64_t count = count_subgroups(m, k, nf->order());
  std::optional<std::uint64_t> listed;
  std::optional<std::uint64_t> orbit_count;
  if (enumerate) listed = enumerate_canonical(m, k, nf).size();
  if (orbits) orbit_count = count_subgroup_orbits(m, k, nf);
  if (ctx.as_json) {
    json result{{"count", count}};
    if (listed) result["enumerated"] = *listed;
    if (orbit_count) result["permutation_orbits"] = *orbit_count;
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}, {"m", m}, {"k", k}}, result));
  } else {
    ctx.out << "count " << count << "\n";
    if (listed) ctx.out << "enumerated " << *listed << "\n";
    if (orbit_count) ctx.out << "permutation_orbits " << *orbit_count << "\n";
  }
  if (listed && *listed != count) throw SoftFailure{"formula and enumeration disagree"};
}

void cmd_seed(Context& ctx, std::int64_t q, std::int64_t n, std::size_t m) {
  const auto nf = load_nf(q, n);
  const SeedMatrix seed = build_seed(m, nf);
  std::string s_order;
  for (Element s : seed.s_order) {
    if (!s_order.empty()) s_order += ' ';
    s_order += elem(*nf, s, ctx.style);
  }
  if (ctx.as_json) {
    json order = json::array();
    for (Element s : seed.s_order) order.push_back(elem(*nf, s, ctx.style));
    emit(ctx, document(*nf, json{{"q", q}, {"n", n}, {"m", m}},
                       json{{"k", seed.k}, {"s_order", order}, {"matrix", matrix_json(seed.matrix, ctx.style)}}));
    return;
  }
  std::ostringstream header;
  header << "seed q=" << q << " n=" << n << " m=" << m << " k=" << seed.k;
  ctx.out << format_matrix(seed.matrix, ctx.style, {header.str(), "s_order " + s_order});
}

void cmd_verify_seed(Context& ctx, const std::string& path) {
  const Matrix v = load_matrix(ctx, path);
  const SeedCheck check = check_seed(v);
  if (ctx.as_json) {
    json result{{"ok", check.ok}, {"m", check.m}, {"dimension", check.dimension}};
    result["closure_full"] = check.closure_checked ? json(check.closure_ok) : json(nullptr);
    emit(ctx, document(v.nf(), matrix_json(v, ctx.style), result));
  } else {
    ctx.out << "ok " << yes_no(check.ok) << "\n"
            << "m " << check.m << "\n"
            << "dimension " << check.dimension << "\n"
            << "closure " << (check.closure_checked ? yes_no(check.closure_ok) : "skipped") << "\n";
  }
  if (!check.ok) throw SoftFailure{"not a seed set: gen ≠ R^m"};
}

void cmd_search_index(Context& ctx, std::int64_t q, std::int64_t n, std::size_t m, std::size_t k,
                      std::size_t bound, std::optional<std::uint64_t> rng_seed, std::uint64_t limit) {
  const auto nf = load_nf(q, n);
  if (k == 0) throw Error("k must be at least 1");
  const VectorSet codec(nf, m);
  const std::uint64_t space = codec.space_size();
  if (space < 2) throw Error("R^m has no nonzero vectors");
  const std::uint64_t nonzero = space - 1;
  if (k > nonzero) throw Error("k exceeds the number of nonzero vectors");

  std::uint64_t examined = 0;
  std::uint64_t generating = 0;
  std::size_t max_index = 0;
  std::vector<Vector> max_example;
  std::vector<Vector> bound_example;

  const auto consider = [&](const std::vector<std::uint64_t>& codes) {
    std::vector<Vector> vs;
    for (auto c : codes) vs.push_back(codec.decode(c));
    ++examined;
    const auto sizes = lc_strata_sizes(vs, nf, m);
    if (sizes.back() != space) return;
    ++generating;
    std::size_t index = 0;
    while (sizes[index] != space) ++index;
    if (max_example.empty() || index > max_index) {
      max_index = index;
      max_example = vs;
    }
    if (index > bound && bound_example.empty()) bound_example = vs;
  };

  std::string mode;
  if (rng_seed) {
    mode = "random";
    std::mt19937_64 rng(*rng_seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, nonzero);
    for (std::uint64_t i = 0; i < limit; ++i) {
      std::vector<std::uint64_t> codes;
      while (codes.size() < k) {
        const std::uint64_t c = pick(rng);
        if (std::find(codes.begin(), codes.end(), c) == codes.end()) codes.push_back(c);
      }
      std::sort(codes.begin(), codes.end());
      consider(codes);
    }
  } else {
    mode = "exhaustive";
    std::vector<std::uint64_t> codes(k);
    for (std::size_t i = 0; i < k; ++i) codes[i] = i + 1;
    while (true) {
      if (examined == limit) throw Error("search exceeds --limit; use --rng-seed to sample");
      consider(codes);
      std::size_t f = k;
      while (f > 0 && codes[f - 1] == nonzero - (k - f)) --f;
      if (f == 0) break;
      ++codes[f - 1];
      for (std::size_t g = f; g < k; ++g) codes[g] = codes[g - 1] + 1;
    }
  }

  const auto vectors_json = [&](const std::vector<Vector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vector_json(*nf, v, ctx.style));
    return a;
  };
  if (ctx.as_json) {
    json input{{"q", q}, {"n", n}, {"m", m}, {"k", k}, {"bound", bound}};
    if (rng_seed) input["rng_seed"] = *rng_seed;
    json result{{"mode", mode},
                {"examined", examined},
                {"generating", generating},
                {"max_index", generating ? json(max_index) : json(nullptr)},
                {"max_example", vectors_json(max_example)},
                {"exceeds_bound", !bound_example.empty()},
                {"bound_example", vectors_json(bound_example)}};
    emit(ctx, document(*nf, input, result));
    return;
  }
  ctx.out << "mode " << mode << "\n"
          << "examined " << examined << "\n"
          << "generating " << generating << "\n";
  if (generating) {
    ctx.out << "max_index " << max_index << "\n";
    for (const auto& v : max_example) ctx.out << "  " << format_vector(*nf, v, ctx.style) << "\n";
  }
  ctx.out << "exceeds_bound " << yes_no(!bound_example.empty()) << "\n";
  for (const auto& v : bound_example) ctx.out << "  " << format_vector(*nf, v, ctx.style) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Computations in finite Dickson nearfields and near-vector spaces", "nearvec"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string style_text = "poly";
  app.add_flag("--json", as_json, "Emit a JSON document");
  app.add_option("--style", style_text, "Element output style")
      ->check(CLI::IsMember({"poly", "code"}));

  std::int64_t q = 0;
  std::int64_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t dim = 0;
  std::size_t bound = 2;
  std::string path;
  std::string trace_path;
  std::string op = "mul";
  std::string kind;
  std::string method = "closed";
  bool with_trace = false;
  bool semantic = false;
  bool enumerate = false;
  bool orbits = false;
  std::optional<std::uint64_t> rng_seed;
  std::uint64_t limit = 100'000;

  const auto add_pair = [&](CLI::App* sub) {
    sub->add_option("q", q, "Prime power q")->required();
    sub->add_option("n", n, "Degree n")->required();
  };

  auto* info = app.add_subcommand("info", "Describe DN(q,n)");
  add_pair(info);
  auto* table = app.add_subcommand("table", "Print the operation table of DN(q,n)");
  add_pair(table);
  table->add_option("--op", op, "Operation")->check(CLI::IsMember({"mul", "add"}));
  auto* witness = app.add_subcommand("witness", "Print the first right-distributivity violation");
  add_pair(witness);
  auto* ege_cmd = app.add_subcommand("ege", "Expanded Gaussian elimination of a matrix file");
  ege_cmd->add_option("file", path, "Matrix file or -")->required();
  ege_cmd->add_flag("--trace", with_trace, "Print the step trace");
  auto* replay_cmd = app.add_subcommand("replay", "Replay a trace on a matrix file");
  replay_cmd->add_option("file", path, "Matrix file or -")->required();
  replay_cmd->add_option("trace", trace_path, "Trace file (or ege --trace output)")->required();
  auto* gen = app.add_subcommand("gen", "Size of the generated R-subgroup");
  gen->add_option("file", path, "Matrix file or -")->required();
  auto* lc = app.add_subcommand("lc-index", "LC strata sizes and the linearity index");
  lc->add_option("file", path, "Matrix file or -")->required();
  auto* classify_cmd = app.add_subcommand("classify-map", "Classify a square matrix as a map");
  classify_cmd->add_option("file", path, "Matrix file or -")->required();
  classify_cmd->add_flag("--semantic", semantic, "Also run the definition-level checks");
  auto* count_maps = app.add_subcommand("count-maps", "Count maps of R^dim");
  add_pair(count_maps);
  count_maps->add_option("dim", dim, "Dimension")->required()->check(CLI::Range(1, 64));
  count_maps->add_option("kind", kind, "all, linear or normal")
      ->required()
      ->check(CLI::IsMember({"all", "linear", "normal"}));
  count_maps->add_option("--method", method, "closed, enum or both")
      ->check(CLI::IsMember({"closed", "enum", "both"}));
  auto* count_sub = app.add_subcommand("count-subgroups", "Count R-subgroups of dimension k in R^m");
  add_pair(count_sub);
  count_sub->add_option("m", m, "Ambient dimension")->required()->check(CLI::PositiveNumber);
  count_sub->add_option("k", k, "Subgroup dimension")->required()->check(CLI::PositiveNumber);
  count_sub->add_flag("--enumerate", enumerate, "Cross-check by listing canonical matrices");
  count_sub->add_flag("--orbits", orbits, "Also report coordinate-permutation orbits");
  auto* seed_cmd = app.add_subcommand("seed", "Build the seed matrix V_m");
  add_pair(seed_cmd);
  seed_cmd->add_option("m", m, "Dimension")->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify-seed", "Check that the rows generate R^m");
  verify->add_option("file", path, "Matrix file or -")->required();
  auto* search = app.add_subcommand("search-index", "Search k-sets of R^m with index above bound");
  add_pair(search);
  search->add_option("m", m, "Dimension")->required()->check(CLI::PositiveNumber);
  search->add_option("k", k, "Set size")->required()->check(CLI::PositiveNumber);
  search->add_option("bound", bound, "Report sets with index above this");
  search->add_option("--rng-seed", rng_seed, "Sample randomly with this seed");
  search->add_option("--limit", limit, "Maximum number of sets examined")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  Context ctx{out, in, as_json, style_text == "code" ? ElementStyle::code : ElementStyle::polynomial};
  try {
    if (info->parsed()) cmd_info(ctx, q, n);
    if (table->parsed()) cmd_table(ctx, q, n, op);
    if (witness->parsed()) cmd_witness(ctx, q, n);
    if (ege_cmd->parsed()) cmd_ege(ctx, path, with_trace);
    if (replay_cmd->parsed()) cmd_replay(ctx, path, trace_path);
    if (gen->parsed()) cmd_gen(ctx, path);
    if (lc->parsed()) cmd_lc_index(ctx, path);
    if (classify_cmd->parsed()) cmd_classify_map(ctx, path, semantic);
    if (count_maps->parsed()) cmd_count_maps(ctx, q, n, dim, kind, method);
    if (count_sub->parsed()) cmd_count_subgroups(ctx, q, n, m, k, enumerate, orbits);
    if (seed_cmd->parsed()) cmd_seed(ctx, q, n, m);
    if (verify->parsed()) cmd_verify_seed(ctx, path);
    if (search->parsed()) cmd_search_index(ctx, q, n, m, k, bound, rng_seed, limit);
  } catch (const SoftFailure& f) {
    err << "error: " << f.reason << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace nearvec::cli
