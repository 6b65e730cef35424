#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ryserlab/duality.hpp"
#include "ryserlab/graph.hpp"

namespace ryser {

// Text formats. Tokens are whitespace separated, '#' starts a comment running to the end of the line.
//
//   cg <n> <r>                 colored multigraph; repeated pairs merge their colors
//   e <u> <v> <c>
//
//   hg <n> <k> <r>             k = 0: non-uniform, r = 0: uncolored (then edges carry no color)
//   part <i> <v...>            optional, i = 0, 1, ... in order
//   e [<c>] <v...>             repeated vertex sets are rejected
//
//   cover <mode> <count>       mode: cover | partition
//   maxsize <m>                optional header lines
//   maxdiam <d>
//   colors <c...>
//   piece <color> <v...>
//   tree <piece> <u> <v> ...   tree edges of an earlier piece, as vertex pairs

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

ColoredMultigraph parse_graph(std::string_view text);
std::string write_graph(const ColoredMultigraph& g);

ColoredHypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const ColoredHypergraph& h);

CoverCertificate parse_cover(std::string_view text);
std::string write_cover(const CoverCertificate& cert);

}  // namespace ryser
