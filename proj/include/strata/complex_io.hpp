#ifndef STRATA_COMPLEX_IO_HPP
#define STRATA_COMPLEX_IO_HPP

#include <iosfwd>
#include <memory>
#include <string>

#include "strata/chain_algebra.hpp"
#include "strata/stratified_complex.hpp"

namespace strata {

// Parse error with line/column diagnostics; maps to CLI exit code 2.
struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

// Complex description format (see docs/complex-format.md for the grammar):
//
//   name <token>
//   dim <n>
//   vertices <count>
//   coord <vertex> <q1> ... <qN>     # optional, exact fractions like 3/4
//   facet <+1|-1> <v0> ... <vn>
//   depth <d> <v0> ... <vk>          # override; default depth is n
//
// '#' starts a comment; blank lines are ignored.
std::shared_ptr<StratifiedComplex> parse_complex(std::istream& in);
std::shared_ptr<StratifiedComplex> load_complex(const std::string& path);
std::string format_complex(const StratifiedComplex& X);
void save_complex(const StratifiedComplex& X, const std::string& path);

// Chain literals: "2*[0,1] - [1,2]" (coefficient 1 may be omitted).
// Tensor terms join simplices with 'x': "[0,1]x[2,3] - 2*[0,2]x[1,3]".
Chain parse_chain(const StratifiedComplex& X, const std::string& text);
TensorChain parse_tensor_chain(const StratifiedComplex& X, int arity, const std::string& text);
std::string format_chain(const Chain& c);

// Chains file: lines "name = <chain literal>"; arity from the literal.
std::map<std::string, TensorChain> load_chains(const StratifiedComplex& X, int arity,
                                               const std::string& path);

}  // namespace strata

#endif
