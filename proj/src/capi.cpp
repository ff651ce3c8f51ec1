#include "ng/ng.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "config.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "search.hpp"
#include "spectrum.hpp"

struct ng_graph {
  ng::Graph g;
};

struct ng_matrix01 {
  ng::Matrix01 m;
};

struct ng_report_list {
  std::vector<ng::BoundReport> reports;
};

struct ng_record {
  ng::ExtremalRecord rec;
};

struct ng_ratio_table {
  std::vector<ng::RatioRow> rows;
};

namespace {

thread_local std::string last_error;

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ng_status to_status(ng::ErrorCode code) {
  switch (code) {
    case ng::ErrorCode::invalid_argument: return NG_ERR_INVALID_ARGUMENT;
    case ng::ErrorCode::parse: return NG_ERR_PARSE;
    case ng::ErrorCode::size_cap: return NG_ERR_SIZE_CAP;
    case ng::ErrorCode::internal: return NG_ERR_INTERNAL;
  }
  return NG_ERR_INTERNAL;
}

ng_status set_error(ng_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
ng_status guarded(F&& body) {
  try {
    body();
    return NG_OK;
  } catch (const BufferTooSmall& e) {
    return set_error(NG_ERR_BUFFER_TOO_SMALL, e.what());
  } catch (const ng::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NG_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) ng::fail(ng::ErrorCode::invalid_argument, what);
}

void copy_values(std::span<const double> values, double* out, std::size_t capacity) {
  if (capacity < values.size()) {
    throw BufferTooSmall("output capacity " + std::to_string(capacity) + " below " +
                         std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), out);
}

ng::BlowupVariant variant_of(ng_blowup_variant v) {
  require(v == NG_BLOWUP_INDEPENDENT || v == NG_BLOWUP_CLIQUE, "unknown blow-up variant");
  return v == NG_BLOWUP_CLIQUE ? ng::BlowupVariant::clique : ng::BlowupVariant::independent;
}

ng::Family family_of(ng_family f) {
  require(f == NG_FAMILY_TOP || f == NG_FAMILY_BOTTOM, "unknown family");
  return f == NG_FAMILY_TOP ? ng::Family::top : ng::Family::bottom;
}

ng_method method_of(ng::Method m) {
  return m == ng::Method::exhaustive ? NG_METHOD_EXHAUSTIVE : NG_METHOD_LOCAL_SEARCH;
}

}  // namespace

extern "C" {

const char* ng_last_error(void) { return last_error.c_str(); }

const char* ng_version(void) { return "1.0.0"; }

size_t ng_get_max_order(void) { return ng::max_order(); }

ng_status ng_set_max_order(size_t cap) {
  return guarded([&] { ng::set_max_order(cap); });
}

ng_status ng_graph_parse_graph6(const char* text, ng_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new ng_graph{ng::parse_graph6(text)};
  });
}

ng_status ng_graph_generate(const char* spec, int has_seed, uint64_t seed, ng_graph** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    auto parsed = ng::parse_generator_spec(spec, has_seed ? std::optional<std::uint64_t>(seed) : std::nullopt);
    *out = new ng_graph{ng::generate(parsed)};
  });
}

ng_status ng_graph_from_edges(size_t n, const size_t* endpoints, size_t edge_count, ng_graph** out) {
  return guarded([&] {
    require(out != nullptr && (endpoints != nullptr || edge_count == 0), "null argument");
    std::vector<ng::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new ng_graph{ng::Graph::from_edges(n, edges)};
  });
}

void ng_graph_free(ng_graph* g) { delete g; }

size_t ng_graph_order(const ng_graph* g) { return g ? g->g.order() : 0; }

size_t ng_graph_edge_count(const ng_graph* g) { return g ? g->g.edge_count() : 0; }

int ng_graph_adjacent(const ng_graph* g, size_t u, size_t v) {
  if (!g || u < 1 || v < 1 || u > g->g.order() || v > g->g.order()) return -1;
  return g->g.adjacent(u, v) ? 1 : 0;
}

int ng_graph_equal(const ng_graph* a, const ng_graph* b) { return a && b && a->g == b->g ? 1 : 0; }

ng_status ng_graph_complement(const ng_graph* g, ng_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new ng_graph{ng::complement(g->g)};
  });
}

ng_status ng_graph_blowup(const ng_graph* g, size_t t, ng_blowup_variant variant, ng_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto v = variant_of(variant);
    *out = new ng_graph{v == ng::BlowupVariant::clique ? ng::blowup_clique(g->g, t)
                                                       : ng::blowup_independent(g->g, t)};
  });
}

ng_status ng_graph_induced(const ng_graph* g, const size_t* vertices, size_t count, ng_graph** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr && (vertices != nullptr || count == 0), "null argument");
    *out = new ng_graph{ng::induced_subgraph(g->g, std::span<const std::size_t>(vertices, count))};
  });
}

ng_status ng_graph_to_graph6(const ng_graph* g, char* buf, size_t capacity, size_t* needed) {
  if (g == nullptr) return set_error(NG_ERR_INVALID_ARGUMENT, "null graph");
  std::string text;
  ng_status st = guarded([&] { text = ng::emit_graph6(g->g); });
  if (st != NG_OK) return st;
  if (needed) *needed = text.size() + 1;
  if (buf == nullptr || capacity < text.size() + 1) {
    return set_error(NG_ERR_BUFFER_TOO_SMALL, "graph6 buffer needs " + std::to_string(text.size() + 1) + " bytes");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return NG_OK;
}

ng_status ng_graph_spectrum(const ng_graph* g, double* out, size_t capacity) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    copy_values(ng::adjacency_spectrum(g->g).values(), out, capacity);
  });
}

ng_status ng_symmetric_eigenvalues(const double* a, size_t n, double* out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    ng::require_within_cap(n, "matrix");
    ng::SymmetricMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        require(a[i * n + j] == a[j * n + i], "matrix is not symmetric");
        m.set(i, j, a[i * n + j]);
      }
    }
    const auto values = ng::symmetric_eigenvalues(m);
    std::copy(values.begin(), values.end(), out);
  });
}

ng_status ng_blowup_spectrum(const double* spectrum, size_t n, size_t t, ng_blowup_variant variant, double* out,
                             size_t capacity) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null argument");
    ng::Spectrum spec(std::vector<double>(spectrum, spectrum + n));
    copy_values(ng::blowup_spectrum_closed_form(spec, t, variant_of(variant)).values(), out, capacity);
  });
}

ng_status ng_regular_shift_spectrum(const double* spectrum, size_t n, double r, double a, double b, double tol,
                                    double* out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    ng::Spectrum spec(std::vector<double>(spectrum, spectrum + n), tol);
    copy_values(ng::regular_shift_spectrum(spec, r, a, b, n).values(), out, n);
  });
}

ng_status ng_construct_a(size_t k, ng_matrix01** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ng_matrix01{ng::construct_A(k)};
  });
}

void ng_matrix01_free(ng_matrix01* m) { delete m; }

size_t ng_matrix01_order(const ng_matrix01* m) { return m ? m->m.order() : 0; }

int ng_matrix01_entry(const ng_matrix01* m, size_t i, size_t j) {
  if (!m || i >= m->m.order() || j >= m->m.order()) return -1;
  return m->m(i, j) ? 1 : 0;
}

ng_status ng_a_spectrum_closed_form(size_t k, double* out, size_t capacity) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    copy_values(ng::a_spectrum_closed_form(k).values(), out, capacity);
  });
}

ng_status ng_extremal_graph(size_t k, size_t t, ng_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ng_graph{ng::extremal_graph(k, t)};
  });
}

ng_status ng_run_battery(const ng_graph* g, long long s_max, double tol, ng_report_list** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    *out = new ng_report_list{ng::run_battery(g->g, s_max, tol)};
  });
}

ng_status ng_witness_check(size_t k, size_t t, double tol, ng_report_list** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    *out = new ng_report_list{ng::witness_check(k, t, tol)};
  });
}

size_t ng_report_list_size(const ng_report_list* list) { return list ? list->reports.size() : 0; }

ng_status ng_report_list_get(const ng_report_list* list, size_t i, ng_bound_report* out) {
  if (!list || !out) return set_error(NG_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= list->reports.size()) return set_error(NG_ERR_INVALID_ARGUMENT, "report index out of range");
  const auto& r = list->reports[i];
  out->bound_id = ng::to_string(r.id).data();
  out->applicable = r.applicable;
  out->strict = r.strictness == ng::Strictness::strict;
  out->lhs = r.lhs;
  out->rhs = r.rhs;
  out->margin = r.margin;
  out->satisfied = r.satisfied;
  out->tol = r.tol;
  out->n = r.n;
  out->has_param = r.param.has_value();
  out->param = r.param.value_or(0);
  out->has_index = r.index.has_value();
  out->index = r.index.value_or(0);
  out->index_set = r.index_set.data();
  out->index_set_size = r.index_set.size();
  out->note = r.note.c_str();
  return NG_OK;
}

size_t ng_report_list_violations(const ng_report_list* list) {
  if (!list) return 0;
  return static_cast<size_t>(
      std::count_if(list->reports.begin(), list->reports.end(), [](const auto& r) { return r.violated(); }));
}

void ng_report_list_free(ng_report_list* list) { delete list; }

ng_status ng_find_ramsey_certificate(const ng_graph* g, long long k, ng_ramsey_certificate* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto cert = ng::ramsey_certificate(g->g, k);
    *out = ng_ramsey_certificate{};
    out->found = cert.found;
    out->is_clique = cert.kind == ng::RamseyKind::clique;
    out->precondition_met = cert.precondition_met;
    out->size = cert.vertices.size();
    std::copy(cert.vertices.begin(), cert.vertices.end(), out->vertices);
  });
}

ng_status ng_exhaustive_f(size_t n, size_t s, ng_family family, int allow_override, unsigned threads,
                          ng_record** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    ng::ExhaustiveOptions opts;
    opts.allow_override = allow_override != 0;
    opts.threads = threads;
    *out = new ng_record{ng::exhaustive_f(n, s, family_of(family), opts)};
  });
}

ng_status ng_local_search_f(size_t n, size_t s, ng_family family, uint64_t seed, size_t iterations,
                            size_t restarts, unsigned threads, ng_record** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    ng::LocalSearchOptions opts{seed, iterations, restarts, threads};
    *out = new ng_record{ng::local_search_f(n, s, family_of(family), opts)};
  });
}

void ng_record_view_get(const ng_record* rec, ng_record_view* out) {
  if (!rec || !out) return;
  const auto& r = rec->rec;
  out->n = r.n;
  out->s = r.s;
  out->family = r.family == ng::Family::top ? NG_FAMILY_TOP : NG_FAMILY_BOTTOM;
  out->value = r.value;
  out->witness = r.witness.c_str();
  out->method = method_of(r.method);
  out->exact = r.exact;
  out->evaluations = r.evaluations;
  out->has_seed = r.seed.has_value();
  out->seed = r.seed.value_or(0);
}

void ng_record_free(ng_record* rec) { delete rec; }

ng_status ng_compute_ratio_table(size_t s, ng_family family, const size_t* orders, size_t count, uint64_t seed,
                         size_t iterations, size_t restarts, int allow_override, ng_ratio_table** out) {
  return guarded([&] {
    require(out != nullptr && (orders != nullptr || count == 0), "null argument");
    ng::LocalSearchOptions local{seed, iterations, restarts, 0};
    ng::ExhaustiveOptions exact;
    exact.allow_override = allow_override != 0;
    *out = new ng_ratio_table{
        ng::ratio_table(s, family_of(family), std::span<const std::size_t>(orders, count), local, exact)};
  });
}

size_t ng_ratio_table_size(const ng_ratio_table* t) { return t ? t->rows.size() : 0; }

ng_status ng_ratio_table_get(const ng_ratio_table* t, size_t i, ng_ratio_row* out) {
  if (!t || !out) return set_error(NG_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= t->rows.size()) return set_error(NG_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = t->rows[i];
  *out = ng_ratio_row{r.n, r.value, r.ratio, r.target, r.gap, method_of(r.method), r.witness.c_str()};
  return NG_OK;
}

void ng_ratio_table_free(ng_ratio_table* t) { delete t; }

}  // extern "C"
