#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ccs/classify.hpp"
#include "ccs/golden.hpp"
#include "ccs/ltp_solver.hpp"
#include "ccs/qprob.hpp"

namespace ccs::io {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "1";

enum class DocumentKind { State, PureState, Partition, EventPair, Report };

std::string_view to_string(DocumentKind k);
DocumentKind parse_kind(std::string_view name);

// Malformed JSON text; carries the 1-based line and column of the failure.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

struct Document {
  DocumentKind kind;
  Json payload;
};

Json parse_json(std::string_view text);
Document parse_document(std::string_view text);
Document as_document(const Json& j);
Json make_document(DocumentKind kind, Json payload);
std::string dump(const Json& j);  // single line

// [re, im]
Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const Operator& m);  // row-major nested arrays
Operator matrix_from_json(const Json& j);
Json to_json(const Ket& v);
Ket vector_from_json(const Json& j);

Json document(const DensityState& s);
Json document(const PureState& s);
Json document(const Partition& p);
Json document(const EventPair& p);
Json document(const CCSReport& r);

DensityState state_from(const Document& d, const Tolerance& tol = {});  // state or pure_state
PureState pure_state_from(const Document& d, const Tolerance& tol = {});
Partition partition_from(const Document& d, const Tolerance& tol = {});
EventPair event_pair_from(const Document& d, const Tolerance& tol = {});

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json to_json(const CCSReport& r);
CCSReport report_from(const Document& d);
Json to_json(const PropositionReport& r);
Json to_json(const ltp::LTPSolution& s);
Json to_json(const golden::Cell& c);

}  // namespace ccs::io
