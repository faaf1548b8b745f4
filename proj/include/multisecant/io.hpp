// JSON documents: variety files in, analysis reports out.
//
// A variety file looks like
//   {"ambient": 4, "field": "QQ" | "GF p", "generators": ["x0*x1 - x2^2", ...],
//    "parametrization": {"params": 2, "coords": [...]},   (optional)
//    "lines": [["x2", "x3", "x4"], ...]}                   (optional)
// where each line is given by linear equations.  Reports never carry wall
// clock times outside their "timing" member.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "multisecant/corpus.hpp"
#include "multisecant/focal.hpp"
#include "multisecant/parse.hpp"

namespace msec {

using Json = nlohmann::ordered_json;

struct VarietyDocument {
  FieldTag field;
  Variety<Fp> variety;           // reduced mod the working prime when the file is over QQ
  std::vector<Line<Fp>> lines;
};

// A file over QQ is reduced modulo `prime`; a file over GF(p) keeps its own p.
VarietyDocument read_variety(const Json& doc, std::uint32_t prime);
VarietyDocument read_variety_file(const std::string& path, std::uint32_t prime);
Json variety_json(const Variety<Fp>& X, const std::vector<Line<Fp>>& lines = {});

// "x2=x3=x4=0" (chains of equal linear forms, comma separated) or two
// points "[1:0:0:0:0],[0:1:0:0:0]".
Line<Fp> parse_line(const std::string& text, int ambient, std::uint32_t prime);
std::vector<std::string> line_equations(const Line<Fp>& line);

// {"char_matrix": [["x0", "x1"], ["x1", "x0"], ["x0", "x0"]]}
CharMatrix read_char_matrix(const Json& doc, std::uint32_t prime);

Json to_json(const FanoReport& r);
Json to_json(const SecancyReport& r);
Json to_json(const OrderReport& r);
Json to_json(const FocalReport& r);
Json to_json(const CharMatrix& M);
Json to_json(const LineAnalysis& a);
Json to_json(const CheckReport& r);
Json to_json(const Expectations& e);

// Total wall time of the runs inside a report.
double timing_seconds(const FanoReport& r);
double timing_seconds(const SecancyReport& r);

// All corpus expectations keyed by entry name.
Json expectations_table();

}  // namespace msec
