#pragma once

#include <iosfwd>
#include <string>

namespace sgh {

// Subcommand drivers, stream-based so tests can run them in-process. Each
// returns the process exit code: 0 success, 1 an identity or agreement
// check failed, 2 malformed input or bad arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Reads a function on S_{degree}, prints the two chain averages, the
// spherical coefficients, and (biinvariant input only) the round-trip
// reconstruction; other input is projected first and marked as such.
struct TransformOptions {
    int degree = 0;  // ambient S_degree; the pair is at n = degree - 1
    std::string format = "text";
};
int cmd_transform(std::istream& in, std::ostream& out, std::ostream& err,
                  const TransformOptions& opt);

// Runs the identity suite for pairs at n <= n_max; prints one line per
// check plus the non-gating residual diagnostics.
struct VerifyOptions {
    int n_max = 3;
    std::string mutate;  // corruption id, empty for none
};
int cmd_verify(std::ostream& out, std::ostream& err, const VerifyOptions& opt);

// Evolves the input function the given number of steps and writes the
// result in the same file format; a closed-form-vs-iteration agreement
// line goes to err so step 0 echoes the canonicalized input byte-for-byte.
struct HeatOptions {
    int degree = 0;
    int steps = 0;
    std::string format = "text";
};
int cmd_heat(std::istream& in, std::ostream& out, std::ostream& err,
             const HeatOptions& opt);

// group: coset averages of a function on S_{degree}, one line per right
//   coset of the embedded S_{degree-1}.
// divisor: multiples-sum transform of a table on 1..N.
// invert: Moebius reconstruction from a table of transform values.
struct RadonOptions {
    std::string mode;     // group | divisor | invert
    int degree = 0;       // group mode
    int truncation = 0;   // divisor/invert: pad the table to at least this N
    int out_max = 10;     // divisor/invert: emit indices 1..min(out_max, N)
    std::string format = "text";
};
int cmd_radon(std::istream& in, std::ostream& out, std::ostream& err,
              const RadonOptions& opt);

// Per partition of `degree`: stabilizer orders, polytabloid support size,
// standard filling count, and the ideal dimension, for the row-major filling.
struct TableauxOptions {
    int degree = 0;
    std::string format = "text";
};
int cmd_tableaux(std::ostream& out, std::ostream& err, const TableauxOptions& opt);

}  // namespace sgh
