#include "ccs/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ccs::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void invalid(const std::string& what) { throw InvalidArgument(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) invalid(std::string("expected an object holding '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) invalid(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) invalid(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) invalid(std::string(what) + ": non-finite number");
  return x;
}

Index dimension(const Json& payload) {
  const Json& d = field(payload, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) invalid("'dim' must be a positive integer");
  return Index(d.get<long long>());
}

template <typename E, std::size_t N>
E enum_from(const Json& j, const std::array<E, N>& values, const char* what) {
  if (!j.is_string()) invalid(std::string(what) + ": expected a string");
  const auto s = j.get<std::string>();
  for (E v : values)
    if (to_string(v) == s) return v;
  invalid(std::string(what) + ": unknown value '" + s + "'");
}

constexpr std::array<CommutationClass, 3> kCommutation{CommutationClass::Commuting, CommutationClass::WeaklyCommuting,
                                                       CommutationClass::Noncommuting};
constexpr std::array<ProductClass, 3> kProduct{ProductClass::AllProduct, ProductClass::SomeNonproduct,
                                               ProductClass::NotApplicable};
constexpr std::array<Triviality, 4> kTriviality{Triviality::Strong, Triviality::Weak, Triviality::Nontrivial,
                                                Triviality::NotACCS};
constexpr std::array<Determinism, 3> kDeterminism{Determinism::Yes, Determinism::No, Determinism::NotACCS};
constexpr std::array<CertificateKind, 2> kCertificate{CertificateKind::Analytic, CertificateKind::Sampled};
constexpr std::array<CorrelationClass, 6> kCorrelation{
    CorrelationClass::Uncorrelated,           CorrelationClass::Correlated,
    CorrelationClass::PerfectlyCorrelated,    CorrelationClass::MaximallyCorrelated,
    CorrelationClass::PerfectlyAnticorrelated, CorrelationClass::MaximallyAnticorrelated};

void require_kind(const Document& d, DocumentKind k) {
  if (d.kind != k)
    invalid("expected a '" + std::string(to_string(k)) + "' document, got '" + std::string(to_string(d.kind)) + "'");
}

void require_dim(Index expected, Index actual, const char* what) {
  if (expected != actual)
    throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(actual) + ", declared " +
                            std::to_string(expected));
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source)
    : InvalidArgument((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::State: return "state";
    case DocumentKind::PureState: return "pure_state";
    case DocumentKind::Partition: return "partition";
    case DocumentKind::EventPair: return "event_pair";
    case DocumentKind::Report: return "report";
  }
  return "?";
}

DocumentKind parse_kind(std::string_view name) {
  for (auto k : {DocumentKind::State, DocumentKind::PureState, DocumentKind::Partition, DocumentKind::EventPair,
                 DocumentKind::Report})
    if (to_string(k) == name) return k;
  invalid("unknown document kind '" + std::string(name) + "'");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (const auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    if (what.rfind("parse error", 0) == 0)
      if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(line, col, what);
  }
}

Document as_document(const Json& j) {
  const Json& v = field(j, "version");
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion)
    invalid("unsupported schema version (expected \"" + std::string(kSchemaVersion) + "\")");
  const Json& k = field(j, "kind");
  if (!k.is_string()) invalid("'kind' must be a string");
  const Json& payload = field(j, "payload");
  if (!payload.is_object()) invalid("'payload' must be an object");
  return {parse_kind(k.get<std::string>()), payload};
}

Document parse_document(std::string_view text) { return as_document(parse_json(text)); }

Json make_document(DocumentKind kind, Json payload) {
  return Json{{"version", kSchemaVersion}, {"kind", to_string(kind)}, {"payload", std::move(payload)}};
}

std::string dump(const Json& j) { return j.dump(); }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) invalid("complex numbers are [re, im] arrays");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json to_json(const Operator& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) invalid("matrices are non-empty arrays of rows");
  const std::size_t n = j.size();
  if (!j[0].is_array()) invalid("matrix rows must be arrays");
  const std::size_t m = j[0].size();
  Operator out(static_cast<Index>(n), static_cast<Index>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m) invalid("matrix rows must have equal length");
    for (std::size_t k = 0; k < m; ++k) out(Index(i), Index(k)) = complex_from_json(j[i][k]);
  }
  return out;
}

Json to_json(const Ket& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Ket vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) invalid("vectors are non-empty arrays");
  Ket v(Index(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(Index(i)) = complex_from_json(j[i]);
  return v;
}

Json document(const DensityState& s) {
  return make_document(DocumentKind::State, {{"dim", s.dim()}, {"rho", to_json(s.rho())}});
}

Json document(const PureState& s) {
  return make_document(DocumentKind::PureState, {{"dim", s.dim()}, {"vector", to_json(s.vector())}});
}

Json document(const Partition& p) {
  Json elems = Json::array();
  for (const auto& c : p) elems.push_back(to_json(c.op()));
  Json payload{{"dim", p.dim()}, {"elements", std::move(elems)}};
  if (p.has_stored_atoms()) {
    Json atoms = Json::array();
    for (const auto& v : p.stored_atoms()) atoms.push_back(to_json(v));
    payload["atoms"] = std::move(atoms);
  }
  return make_document(DocumentKind::Partition, std::move(payload));
}

Json document(const EventPair& p) {
  return make_document(DocumentKind::EventPair,
                       {{"dim", p.dim()}, {"A", to_json(p.A().op())}, {"B", to_json(p.B().op())}});
}

Json document(const CCSReport& r) { return make_document(DocumentKind::Report, to_json(r)); }

DensityState state_from(const Document& d, const Tolerance& tol) {
  if (d.kind == DocumentKind::PureState) return DensityState::from_pure(pure_state_from(d, tol));
  require_kind(d, DocumentKind::State);
  const Index dim = dimension(d.payload);
  Operator rho = matrix_from_json(field(d.payload, "rho"));
  require_dim(dim, rho.rows(), "state");
  return DensityState(std::move(rho), tol);
}

PureState pure_state_from(const Document& d, const Tolerance& tol) {
  require_kind(d, DocumentKind::PureState);
  const Index dim = dimension(d.payload);
  Ket v = vector_from_json(field(d.payload, "vector"));
  require_dim(dim, v.size(), "pure state");
  return PureState(std::move(v), tol);
}

Partition partition_from(const Document& d, const Tolerance& tol) {
  require_kind(d, DocumentKind::Partition);
  const Index dim = dimension(d.payload);
  const Json& elems = field(d.payload, "elements");
  if (!elems.is_array() || elems.empty()) invalid("'elements' must be a non-empty array");
  if (const auto it = d.payload.find("atoms"); it != d.payload.end()) {
    if (!it->is_array() || it->size() != elems.size()) invalid("'atoms' must match 'elements'");
    std::vector<Ket> atoms;
    for (const auto& a : *it) {
      atoms.push_back(vector_from_json(a));
      require_dim(dim, atoms.back().size(), "atom");
    }
    Partition p = Partition::from_atoms(std::move(atoms), tol);
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (!detail::approx_equal<double>(matrix_from_json(elems[k]), p[k].op(), tol.eps_eq))
        invalid("element " + std::to_string(k) + " does not match its atom");
    return p;
  }
  std::vector<Projection> ps;
  for (const auto& e : elems) {
    Operator m = matrix_from_json(e);
    require_dim(dim, m.rows(), "partition element");
    ps.emplace_back(std::move(m), tol);
  }
  return Partition(std::move(ps), tol);
}

EventPair event_pair_from(const Document& d, const Tolerance& tol) {
  require_kind(d, DocumentKind::EventPair);
  const Index dim = dimension(d.payload);
  Operator a = matrix_from_json(field(d.payload, "A"));
  Operator b = matrix_from_json(field(d.payload, "B"));
  require_dim(dim, a.rows(), "event A");
  require_dim(dim, b.rows(), "event B");
  return EventPair(Projection(std::move(a), tol), Projection(std::move(b), tol), tol);
}

Json to_json(const Witness& w) {
  Json j{{"reason", w.reason}, {"state", to_json(w.state)}};
  if (!w.partition.empty()) {
    Json elems = Json::array();
    for (const auto& c : w.partition) elems.push_back(to_json(c));
    j["partition"] = std::move(elems);
  }
  if (w.A) j["A"] = to_json(*w.A);
  if (w.B) j["B"] = to_json(*w.B);
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  const Json& reason = field(j, "reason");
  if (!reason.is_string()) invalid("'reason' must be a string");
  w.reason = reason.get<std::string>();
  w.state = matrix_from_json(field(j, "state"));
  if (const auto it = j.find("partition"); it != j.end()) {
    if (!it->is_array()) invalid("'partition' must be an array");
    for (const auto& e : *it) w.partition.push_back(matrix_from_json(e));
  }
  if (const auto it = j.find("A"); it != j.end()) w.A = matrix_from_json(*it);
  if (const auto it = j.find("B"); it != j.end()) w.B = matrix_from_json(*it);
  return w;
}

Json to_json(const CCSReport& r) {
  Json cert = nullptr;
  if (r.certificate)
    cert = Json{{"kind", to_string(r.certificate->kind)},
                {"mechanism", r.certificate->mechanism},
                {"seed", r.certificate->seed},
                {"samples", r.certificate->samples}};
  Json cex = Json::array();
  for (const auto& w : r.counterexamples) cex.push_back(to_json(w));
  return Json{{"is_ccs", r.is_ccs},
              {"rank_profile", r.rank_profile},
              {"atomic", r.atomic},
              {"commutation", to_string(r.commutation)},
              {"product", to_string(r.product)},
              {"triviality", to_string(r.triviality)},
              {"certificate", std::move(cert)},
              {"ltp", r.ltp},
              {"ltp_residuals", r.ltp_residuals},
              {"deterministic", to_string(r.deterministic)},
              {"correlation_class", to_string(r.correlation_class)},
              {"zero_probability_elements", r.zero_probability_elements},
              {"counterexamples", std::move(cex)},
              {"notes", r.notes},
              {"seed", r.seed}};
}

CCSReport report_from(const Document& d) {
  require_kind(d, DocumentKind::Report);
  const Json& p = d.payload;
  CCSReport r;
  try {
    r.is_ccs = field(p, "is_ccs").get<bool>();
    r.rank_profile = field(p, "rank_profile").get<std::vector<Index>>();
    r.atomic = field(p, "atomic").get<bool>();
    r.commutation = enum_from(field(p, "commutation"), kCommutation, "commutation");
    r.product = enum_from(field(p, "product"), kProduct, "product");
    r.triviality = enum_from(field(p, "triviality"), kTriviality, "triviality");
    const Json& cert = field(p, "certificate");
    if (!cert.is_null())
      r.certificate = Certificate{enum_from(field(cert, "kind"), kCertificate, "certificate kind"),
                                  field(cert, "mechanism").get<std::string>(),
                                  field(cert, "seed").get<std::uint64_t>(), field(cert, "samples").get<std::size_t>()};
    r.ltp = field(p, "ltp").get<bool>();
    r.ltp_residuals = field(p, "ltp_residuals").get<std::array<double, 4>>();
    r.deterministic = enum_from(field(p, "deterministic"), kDeterminism, "deterministic");
    r.correlation_class = enum_from(field(p, "correlation_class"), kCorrelation, "correlation_class");
    r.zero_probability_elements = field(p, "zero_probability_elements").get<std::vector<std::size_t>>();
    for (const auto& w : field(p, "counterexamples")) r.counterexamples.push_back(witness_from_json(w));
    r.notes = field(p, "notes").get<std::vector<std::string>>();
    r.seed = field(p, "seed").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    invalid(std::string("report: ") + e.what());
  }
  return r;
}

Json to_json(const PropositionReport& r) {
  Json results = Json::array();
  for (const auto& p : r.results) {
    Json cex = Json::array();
    for (const auto& w : p.counterexamples) cex.push_back(to_json(w));
    results.push_back({{"name", p.name},
                       {"strategy", p.strategy},
                       {"instances", p.instances},
                       {"hypotheses_met", p.hypotheses_met},
                       {"violations", p.violations},
                       {"counterexamples", std::move(cex)}});
  }
  return Json{{"seed", r.seed},
              {"n", r.n},
              {"results", std::move(results)},
              {"contrast",
               {{"family", "CCS22ntratC"},
                {"ccs", r.contrast.ccs},
                {"noncommuting", r.contrast.noncommuting},
                {"ltp", r.contrast.ltp},
                {"deterministic", r.contrast.deterministic},
                {"confirmed", r.contrast.confirmed()}}},
              {"passed", r.all_passed()}};
}

Json to_json(const ltp::LTPSolution& s) {
  return Json{{"theta", s.theta}, {"xi", s.xi}, {"a", s.a}, {"b", s.b}, {"unique", s.unique}};
}

Json to_json(const golden::Cell& c) {
  return Json{{"family", c.family},     {"params", c.params},
              {"column", c.column},     {"expected", c.expected},
              {"actual", c.actual},     {"status", golden::to_string(c.status)},
              {"detail", c.detail}};
}

}  // namespace ccs::io
