// ngtool: command-line front end over the libng C API.
//
// Exit codes: 0 success, 1 usage or input error, 2 an applicable bound is
// violated.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ng/ng.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ng_status st) {
  if (st != NG_OK) throw UsageError(ng_last_error());
}

struct GraphDeleter {
  void operator()(ng_graph* g) const { ng_graph_free(g); }
};
struct MatrixDeleter {
  void operator()(ng_matrix01* m) const { ng_matrix01_free(m); }
};
struct ReportsDeleter {
  void operator()(ng_report_list* l) const { ng_report_list_free(l); }
};
struct RecordDeleter {
  void operator()(ng_record* r) const { ng_record_free(r); }
};
struct TableDeleter {
  void operator()(ng_ratio_table* t) const { ng_ratio_table_free(t); }
};
using GraphPtr = std::unique_ptr<ng_graph, GraphDeleter>;
using ReportsPtr = std::unique_ptr<ng_report_list, ReportsDeleter>;

// ---- number formatting ----------------------------------------------------

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  const double r = std::strtod(fmt(v).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string join(const std::vector<double>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += fmt(xs[i]);
  }
  return out;
}

// ---- shared options -------------------------------------------------------

enum class Format { text, json, csv };

struct Common {
  std::string format = "text";
  std::string output;
  double tol = 1e-8;
  std::size_t max_order = 0;
};

struct Input {
  std::string graph6;
  std::string file;
  std::string generate;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output, "Write output to this file instead of stdout");
  cmd->add_option("--tol", c.tol, "Comparison tolerance (> 0)")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--max-order", c.max_order, "Size cap on graph order (overrides NG_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
}

void add_input(CLI::App* cmd, Input& in) {
  auto* g6 = cmd->add_option("--graph6", in.graph6, "Inline graph6 string");
  auto* file = cmd->add_option("--file", in.file, "File holding one graph6 string");
  auto* gen = cmd->add_option("--generate", in.generate,
                              "Generator: complete:N, empty:N, path:N, cycle:N, complete_bipartite:A:B, "
                              "erdos_renyi:N:P[:SEED]");
  g6->excludes(file)->excludes(gen);
  file->excludes(gen);
  cmd->add_option("--seed", in.seed, "Seed for random generators");
}

Format format_of(const Common& c) {
  if (c.format == "json") return Format::json;
  if (c.format == "csv") return Format::csv;
  return Format::text;
}

void apply_common(const Common& c) {
  if (c.max_order != 0) check(ng_set_max_order(c.max_order));
}

std::string read_graph6_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::string line;
  std::string found;
  while (std::getline(f, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    if (!found.empty()) throw UsageError("'" + path + "' holds more than one graph");
    found = line;
  }
  if (found.empty()) throw UsageError("'" + path + "' holds no graph");
  return found;
}

GraphPtr load_graph(const Input& in) {
  const int sources = !in.graph6.empty() + !in.file.empty() + !in.generate.empty();
  if (sources != 1) throw UsageError("exactly one of --graph6, --file, --generate is required");
  ng_graph* g = nullptr;
  if (!in.generate.empty()) {
    check(ng_graph_generate(in.generate.c_str(), in.seed.has_value(), in.seed.value_or(0), &g));
  } else {
    const std::string text = in.graph6.empty() ? read_graph6_file(in.file) : in.graph6;
    check(ng_graph_parse_graph6(text.c_str(), &g));
  }
  return GraphPtr(g);
}

std::string graph6_of(const ng_graph* g) {
  std::size_t needed = 0;
  ng_graph_to_graph6(g, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  check(ng_graph_to_graph6(g, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

std::vector<double> spectrum_of(const ng_graph* g) {
  std::vector<double> v(ng_graph_order(g));
  check(ng_graph_spectrum(g, v.data(), v.size()));
  return v;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  f << text;
}

// key=value tokens such as "n=4 s=2 family=top".
std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& tokens, const std::string& flag) {
  std::map<std::string, std::string> out;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(flag + ": expected key=value, got '" + t + "'");
    if (!out.emplace(t.substr(0, eq), t.substr(eq + 1)).second) throw UsageError(flag + ": duplicate key in '" + t + "'");
  }
  return out;
}

class Pairs {
 public:
  Pairs(std::map<std::string, std::string> kv, std::string flag) : kv_(std::move(kv)), flag_(std::move(flag)) {}

  std::uint64_t integer(const std::string& key, std::optional<std::uint64_t> fallback = std::nullopt) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
      if (fallback) return *fallback;
      throw UsageError(flag_ + ": missing " + key + "=");
    }
    used_.push_back(key);
    const std::string& s = it->second;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw UsageError(flag_ + ": " + key + " must be a non-negative integer, got '" + s + "'");
    return std::stoull(s);
  }

  std::optional<std::uint64_t> optional_integer(const std::string& key) {
    if (!kv_.count(key)) return std::nullopt;
    return integer(key);
  }

  std::string text(const std::string& key) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw UsageError(flag_ + ": missing " + key + "=");
    used_.push_back(key);
    return it->second;
  }

  void finish() const {
    for (const auto& [k, v] : kv_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw UsageError(flag_ + ": unknown key '" + k + "'");
    }
  }

 private:
  std::map<std::string, std::string> kv_;
  std::string flag_;
  std::vector<std::string> used_;
};

ng_family family_of(const std::string& s) {
  if (s == "top") return NG_FAMILY_TOP;
  if (s == "bottom") return NG_FAMILY_BOTTOM;
  throw UsageError("family must be 'top' or 'bottom', got '" + s + "'");
}

const char* family_name(ng_family f) { return f == NG_FAMILY_TOP ? "top" : "bottom"; }
const char* method_name(ng_method m) { return m == NG_METHOD_EXHAUSTIVE ? "exhaustive" : "local_search"; }

// ---- bound reports --------------------------------------------------------

std::vector<ng_bound_report> reports_of(const ng_report_list* list) {
  std::vector<ng_bound_report> out(ng_report_list_size(list));
  for (std::size_t i = 0; i < out.size(); ++i) check(ng_report_list_get(list, i, &out[i]));
  return out;
}

std::string param_field(const ng_bound_report& r) {
  std::string out;
  if (r.has_param) out = std::to_string(r.param);
  if (r.has_index) out += ";i=" + std::to_string(r.index);
  if (r.index_set_size > 0 || std::string(r.bound_id) == "partial_square_sum") {
    out = "X=";
    for (std::size_t i = 0; i < r.index_set_size; ++i) {
      if (i) out += ' ';
      out += std::to_string(r.index_set[i]);
    }
  }
  return out;
}

json report_json(const ng_bound_report& r) {
  json j;
  j["bound_id"] = r.bound_id;
  j["n"] = r.n;
  j["s_or_k"] = r.has_param ? json(r.param) : json(nullptr);
  if (r.has_index) j["i"] = r.index;
  if (std::string(r.bound_id) == "partial_square_sum")
    j["X"] = std::vector<std::size_t>(r.index_set, r.index_set + r.index_set_size);
  j["applicable"] = r.applicable != 0;
  j["strict"] = r.strict != 0;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["margin"] = num(r.margin);
  j["satisfied"] = r.satisfied != 0;
  j["tol"] = num(r.tol);
  if (r.note[0] != '\0') j["note"] = r.note;
  return j;
}

const char* kReportCsvHeader = "bound_id,n,s_or_k,applicable,strict,lhs,rhs,margin,satisfied,tol\n";

std::string report_csv(const ng_bound_report& r) {
  std::ostringstream os;
  os << r.bound_id << ',' << r.n << ',' << param_field(r) << ',' << (r.applicable ? "true" : "false") << ','
     << (r.strict ? "true" : "false") << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.margin) << ','
     << (r.satisfied ? "true" : "false") << ',' << fmt(r.tol) << '\n';
  return os.str();
}

std::string report_text(const ng_bound_report& r) {
  std::ostringstream os;
  const std::string status = !r.applicable ? "n/a" : r.satisfied ? "ok" : "VIOLATED";
  os << r.bound_id;
  const std::string p = param_field(r);
  if (!p.empty()) os << " [" << p << ']';
  os << ": " << status << "  lhs=" << fmt(r.lhs) << (r.strict ? " < " : " <= ") << "rhs=" << fmt(r.rhs)
     << "  margin=" << fmt(r.margin);
  if (r.note[0] != '\0') os << "  (" << r.note << ')';
  os << '\n';
  return os.str();
}

std::size_t count_violations(const std::vector<ng_bound_report>& reports) {
  std::size_t v = 0;
  for (const auto& r : reports) v += r.applicable && !r.satisfied;
  return v;
}

// ---- subcommands ----------------------------------------------------------

int cmd_spectrum(const Common& c, const Input& in) {
  apply_common(c);
  const GraphPtr g = load_graph(in);
  ng_graph* raw = nullptr;
  check(ng_graph_complement(g.get(), &raw));
  const GraphPtr comp(raw);
  const std::size_t n = ng_graph_order(g.get());
  const std::size_t e = ng_graph_edge_count(g.get());
  const auto mu = spectrum_of(g.get());
  const auto mu_bar = spectrum_of(comp.get());

  std::string out;
  switch (format_of(c)) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["edges"] = e;
      j["graph6"] = graph6_of(g.get());
      json a = json::array(), b = json::array();
      for (double v : mu) a.push_back(num(v));
      for (double v : mu_bar) b.push_back(num(v));
      j["spectrum"] = a;
      j["complement_spectrum"] = b;
      out = j.dump() + "\n";
      break;
    }
    case Format::csv:
      out = "n,edges,i,mu,mu_complement\n";
      for (std::size_t i = 0; i < n; ++i)
        out += std::to_string(n) + ',' + std::to_string(e) + ',' + std::to_string(i + 1) + ',' + fmt(mu[i]) + ',' +
               fmt(mu_bar[i]) + '\n';
      break;
    case Format::text:
      out = "n = " + std::to_string(n) + ", e(G) = " + std::to_string(e) + "\n";
      out += "G: " + join(mu, ", ") + "\n";
      out += "complement: " + join(mu_bar, ", ") + "\n";
      break;
  }
  emit(c, out);
  return kExitOk;
}

std::string render_reports(const Common& c, const std::vector<ng_bound_report>& reports, json header) {
  std::string out;
  switch (format_of(c)) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      header["violations"] = count_violations(reports);
      header["reports"] = std::move(arr);
      out = header.dump() + "\n";
      break;
    }
    case Format::csv:
      out = kReportCsvHeader;
      for (const auto& r : reports) out += report_csv(r);
      break;
    case Format::text:
      for (const auto& r : reports) out += report_text(r);
      out += "reports: " + std::to_string(reports.size()) + ", violations: " +
             std::to_string(count_violations(reports)) + "\n";
      break;
  }
  return out;
}

int cmd_check(const Common& c, const Input& in, long long s_max) {
  apply_common(c);
  const GraphPtr g = load_graph(in);
  ng_report_list* raw = nullptr;
  check(ng_run_battery(g.get(), s_max, c.tol, &raw));
  const ReportsPtr list(raw);
  const auto reports = reports_of(list.get());

  json header;
  header["n"] = ng_graph_order(g.get());
  header["edges"] = ng_graph_edge_count(g.get());
  header["graph6"] = graph6_of(g.get());
  header["s_max"] = s_max;
  header["tol"] = num(c.tol);
  std::string out = render_reports(c, reports, std::move(header));
  if (format_of(c) == Format::text) out = "graph6: " + graph6_of(g.get()) + "\n" + out;
  emit(c, out);
  return count_violations(reports) == 0 ? kExitOk : kExitViolation;
}

int cmd_construct_a(const Common& c, long long k) {
  apply_common(c);
  if (k < 1) throw UsageError("--a-matrix: k must be at least 1");
  ng_matrix01* raw = nullptr;
  check(ng_construct_a(static_cast<std::size_t>(k), &raw));
  const std::unique_ptr<ng_matrix01, MatrixDeleter> a(raw);
  const std::size_t m = ng_matrix01_order(a.get());
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m; ++i) {
    std::string r;
    for (std::size_t j = 0; j < m; ++j) r += ng_matrix01_entry(a.get(), i, j) ? '1' : '0';
    rows.push_back(r);
  }

  std::string out;
  switch (format_of(c)) {
    case Format::json: {
      json j;
      j["k"] = k;
      j["order"] = m;
      j["rows"] = rows;
      out = j.dump() + "\n";
      break;
    }
    case Format::csv:
      for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (j) out += ',';
          out += r[j];
        }
        out += '\n';
      }
      break;
    case Format::text:
      for (const auto& r : rows) out += r + '\n';
      break;
  }
  emit(c, out);
  return kExitOk;
}

int cmd_construct_extremal(const Common& c, const std::vector<std::string>& tokens) {
  apply_common(c);
  Pairs kv(parse_pairs(tokens, "--extremal"), "--extremal");
  const auto k = kv.integer("k");
  const auto t = kv.integer("t");
  kv.finish();
  if (k < 1 || t < 1) throw UsageError("--extremal: k and t must be at least 1");

  ng_graph* raw = nullptr;
  check(ng_extremal_graph(k, t, &raw));
  const GraphPtr g(raw);
  ng_report_list* list_raw = nullptr;
  check(ng_witness_check(k, t, c.tol, &list_raw));
  const ReportsPtr list(list_raw);
  const auto reports = reports_of(list.get());
  const std::string g6 = graph6_of(g.get());

  std::string out;
  switch (format_of(c)) {
    case Format::json: {
      json header;
      header["k"] = k;
      header["t"] = t;
      header["n"] = ng_graph_order(g.get());
      header["s"] = (std::uint64_t{1} << (k - 1)) + 1;
      header["graph6"] = g6;
      header["tol"] = num(c.tol);
      out = render_reports(c, reports, std::move(header));
      break;
    }
    case Format::csv:
      out = render_reports(c, reports, {});
      break;
    case Format::text:
      out = "graph6: " + g6 + "\n" + render_reports(c, reports, {});
      break;
  }
  emit(c, out);
  return count_violations(reports) == 0 ? kExitOk : kExitViolation;
}

json record_json(const ng_record_view& v) {
  json j;
  j["n"] = v.n;
  j["s"] = v.s;
  j["family"] = family_name(v.family);
  j["value"] = num(v.value);
  j["witness"] = v.witness;
  j["method"] = method_name(v.method);
  j["exact"] = v.exact != 0;
  j["evaluations"] = v.evaluations;
  j["seed"] = v.has_seed ? json(v.seed) : json(nullptr);
  return j;
}

std::string render_record(const Common& c, const ng_record_view& v) {
  switch (format_of(c)) {
    case Format::json:
      return record_json(v).dump() + "\n";
    case Format::csv:
      return "n,s,family,value,witness,method,exact,evaluations,seed\n" + std::to_string(v.n) + ',' +
             std::to_string(v.s) + ',' + family_name(v.family) + ',' + fmt(v.value) + ',' + v.witness + ',' +
             method_name(v.method) + ',' + (v.exact ? "true" : "false") + ',' + std::to_string(v.evaluations) +
             ',' + (v.has_seed ? std::to_string(v.seed) : "") + '\n';
    case Format::text: {
      std::string out = std::string(v.exact ? "f" : "lower bound on f") + " (n=" + std::to_string(v.n) +
                        ", s=" + std::to_string(v.s) + ", family=" + family_name(v.family) + ") = " + fmt(v.value) +
                        "\n";
      out += "witness: " + std::string(v.witness) + "\n";
      out += "method: " + std::string(method_name(v.method)) + ", evaluations: " + std::to_string(v.evaluations);
      if (v.has_seed) out += ", seed: " + std::to_string(v.seed);
      return out + "\n";
    }
  }
  return {};
}

struct SearchArgs {
  std::vector<std::string> exact;
  std::vector<std::string> local;
  std::vector<std::string> table;
  bool allow_n8 = false;
  unsigned threads = 0;
};

std::uint64_t resolve_seed(Pairs& kv, const Input& in) {
  const auto from_pairs = kv.optional_integer("seed");
  if (from_pairs && in.seed && *from_pairs != *in.seed) throw UsageError("seed= and --seed disagree");
  return from_pairs.value_or(in.seed.value_or(0));
}

std::vector<std::size_t> parse_orders(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw UsageError("--table: n= expects a comma-separated list of orders, got '" + text + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw UsageError("--table: n= is empty");
  return out;
}

int cmd_search(const Common& c, const Input& in, const SearchArgs& a) {
  apply_common(c);
  const int modes = !a.exact.empty() + !a.local.empty() + !a.table.empty();
  if (modes != 1) throw UsageError("exactly one of --exact, --local, --table is required");

  if (!a.exact.empty()) {
    Pairs kv(parse_pairs(a.exact, "--exact"), "--exact");
    const auto n = kv.integer("n");
    const auto s = kv.integer("s");
    const ng_family f = family_of(kv.text("family"));
    kv.finish();
    ng_record* raw = nullptr;
    check(ng_exhaustive_f(n, s, f, a.allow_n8, a.threads, &raw));
    const std::unique_ptr<ng_record, RecordDeleter> rec(raw);
    ng_record_view v;
    ng_record_view_get(rec.get(), &v);
    emit(c, render_record(c, v));
    return kExitOk;
  }

  if (!a.local.empty()) {
    Pairs kv(parse_pairs(a.local, "--local"), "--local");
    const auto n = kv.integer("n");
    const auto s = kv.integer("s");
    const ng_family f = family_of(kv.text("family"));
    const auto seed = resolve_seed(kv, in);
    const auto iterations = kv.integer("iterations", 100);
    const auto restarts = kv.integer("restarts", 4);
    kv.finish();
    ng_record* raw = nullptr;
    check(ng_local_search_f(n, s, f, seed, iterations, restarts, a.threads, &raw));
    const std::unique_ptr<ng_record, RecordDeleter> rec(raw);
    ng_record_view v;
    ng_record_view_get(rec.get(), &v);
    emit(c, render_record(c, v));
    return kExitOk;
  }

  Pairs kv(parse_pairs(a.table, "--table"), "--table");
  const auto s = kv.integer("s");
  const ng_family f = family_of(kv.text("family"));
  const auto orders = parse_orders(kv.text("n"));
  const auto seed = resolve_seed(kv, in);
  const auto iterations = kv.integer("iterations", 100);
  const auto restarts = kv.integer("restarts", 4);
  kv.finish();
  ng_ratio_table* raw = nullptr;
  check(ng_compute_ratio_table(s, f, orders.data(), orders.size(), seed, iterations, restarts, a.allow_n8, &raw));
  const std::unique_ptr<ng_ratio_table, TableDeleter> table(raw);

  std::string out;
  const Format fmt_kind = format_of(c);
  if (fmt_kind == Format::csv) out = "n,value,ratio,target,gap,method,witness\n";
  if (fmt_kind == Format::text) out = "n value value/n target gap method witness\n";
  for (std::size_t i = 0; i < ng_ratio_table_size(table.get()); ++i) {
    ng_ratio_row row;
    check(ng_ratio_table_get(table.get(), i, &row));
    if (fmt_kind == Format::json) {
      json j;
      j["s"] = s;
      j["family"] = family_name(f);
      j["n"] = row.n;
      j["value"] = num(row.value);
      j["ratio"] = num(row.ratio);
      j["target"] = num(row.target);
      j["gap"] = num(row.gap);
      j["method"] = method_name(row.method);
      j["witness"] = row.witness;
      out += j.dump() + "\n";
    } else {
      const char sep = fmt_kind == Format::csv ? ',' : ' ';
      out += std::to_string(row.n) + sep + fmt(row.value) + sep + fmt(row.ratio) + sep + fmt(row.target) + sep +
             fmt(row.gap) + sep + method_name(row.method) + sep + row.witness + '\n';
    }
  }
  emit(c, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Nordhaus-Gaddum toolkit: spectra, bound checks, constructions and extremal search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ng_version()));

  Common common;
  Input input;

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectra of a graph and its complement");
  add_common(spectrum, common);
  add_input(spectrum, input);

  long long s_max = 3;
  auto* chk = app.add_subcommand("check", "Evaluate every bound on a graph; exit 2 on a violation");
  add_common(chk, common);
  add_input(chk, input);
  chk->add_option("--s-max", s_max, "Largest s (or k) for parameterised bounds")->capture_default_str();

  long long a_k = 0;
  std::vector<std::string> extremal;
  auto* construct = app.add_subcommand("construct", "Recursive 0/1 matrices and extremal graphs");
  add_common(construct, common);
  auto* a_opt = construct->add_option("--a-matrix", a_k, "Print A_K as a 0/1 grid");
  auto* e_opt = construct->add_option("--extremal", extremal, "Extremal graph and witness checks: k=K t=T")
                    ->expected(2);
  a_opt->excludes(e_opt);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exact or heuristic extremal values");
  add_common(search, common);
  search->add_option("--exact", search_args.exact, "Exhaustive: n=N s=S family=top|bottom")->expected(3);
  search->add_option("--local", search_args.local,
                     "Local search: n=N s=S family=F [seed=X] [iterations=I] [restarts=R]")
      ->expected(3, 6);
  search->add_option("--table", search_args.table,
                     "Ratio table: s=S family=F n=N1,N2,... [seed=X] [iterations=I] [restarts=R]")
      ->expected(3, 6);
  search->add_flag("--allow-n8", search_args.allow_n8, "Allow exhaustive enumeration at n = 8");
  search->add_option("--threads", search_args.threads, "Worker threads (0: all cores)");
  search->add_option("--seed", input.seed, "Seed for local search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(common, input);
    if (*chk) return cmd_check(common, input, s_max);
    if (*construct) {
      if (!*a_opt && !*e_opt) throw UsageError("construct needs --a-matrix K or --extremal k=K t=T");
      return *a_opt ? cmd_construct_a(common, a_k) : cmd_construct_extremal(common, extremal);
    }
    if (*search) return cmd_search(common, input, search_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
