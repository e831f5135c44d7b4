#include "sgharm/commands.hpp"

#include "sgharm/function_file.hpp"
#include "sgharm/gelfand.hpp"
#include "sgharm/heat.hpp"
#include "sgharm/radon.hpp"
#include "sgharm/spherical.hpp"
#include "sgharm/verify.hpp"
#include "sgharm/young.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace sgh {

namespace {

using nlohmann::json;

std::string double_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool check_format(const std::string& format, std::ostream& err) {
    if (format == "text" || format == "json") return true;
    err << "error: format must be text or json\n";
    return false;
}

// Reads and validates a function for a pair-based command: the degree must
// match and stay within whole-group enumeration reach.
bool load_function(std::istream& in, std::ostream& err, int degree,
                   AlgebraElement* out) {
    if (degree < 2) {
        err << "error: degree must be at least 2\n";
        return false;
    }
    if (degree > kEnumerationBound) {
        err << "error: degree exceeds the enumeration bound "
            << kEnumerationBound << "\n";
        return false;
    }
    try {
        AlgebraElement f = read_function(in);
        if (f.degree() != degree) {
            err << "error: file degree " << f.degree() << " does not match --degree "
                << degree << "\n";
            return false;
        }
        *out = std::move(f);
        return true;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return false;
    }
}

}  // namespace

int cmd_transform(std::istream& in, std::ostream& out, std::ostream& err,
                  const TransformOptions& opt) {
    if (!check_format(opt.format, err)) return kExitUsage;
    AlgebraElement f(1);
    if (!load_function(in, err, opt.degree, &f)) return kExitUsage;

    const int n = opt.degree - 1;
    const Rational lambda1 = level_subgroup_average(f, n);
    const Rational lambda2 = level_transversal_average(f, n);
    const auto [ct, cp] = transform_pair(f, n);

    const BiinvariantFn data{n, f.at(Permutation::identity(n + 1)),
                             f.at(Permutation::transposition(n + 1, 1, n + 1))};
    const bool biinvariant = (expand(data) == f);

    bool roundtrip_exact = false;
    BiinvariantFn rec = invert_biinvariant(ct, cp, n);
    if (biinvariant) roundtrip_exact = (expand(rec) == f);

    if (opt.format == "json") {
        json j;
        j["degree"] = opt.degree;
        j["lambda1"] = format_rational(lambda1);
        j["lambda2"] = format_rational(lambda2);
        j["coef_trivial"] = format_rational(ct);
        j["coef_phi"] = format_rational(cp);
        j["biinvariant"] = biinvariant;
        j["roundtrip"] = biinvariant ? (roundtrip_exact ? "exact" : "FAILED")
                                     : "n/a (projected)";
        j["value_on_subgroup"] = format_rational(rec.on_subgroup);
        j["value_off_subgroup"] = format_rational(rec.on_transversal);
        out << j.dump(2) << "\n";
    } else {
        out << "degree " << opt.degree << "\n";
        out << "lambda1 " << format_rational(lambda1) << "\n";
        out << "lambda2 " << format_rational(lambda2) << "\n";
        out << "coef_trivial " << format_rational(ct) << "\n";
        out << "coef_phi " << format_rational(cp) << "\n";
        out << "biinvariant " << (biinvariant ? "yes" : "no") << "\n";
        out << "roundtrip "
            << (biinvariant ? (roundtrip_exact ? "exact" : "FAILED")
                            : "n/a (projected)")
            << "\n";
        out << "value_on_subgroup " << format_rational(rec.on_subgroup) << "\n";
        out << "value_off_subgroup " << format_rational(rec.on_transversal) << "\n";
    }
    return (biinvariant && !roundtrip_exact) ? kExitCheckFailed : kExitOk;
}

int cmd_verify(std::ostream& out, std::ostream& err, const VerifyOptions& opt) {
    try {
        set_mutation(opt.mutate);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    VerifyReport rep;
    try {
        rep = run_verification(opt.n_max);
    } catch (const std::invalid_argument& e) {
        set_mutation("");
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    set_mutation("");
    print_report(out, rep);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_heat(std::istream& in, std::ostream& out, std::ostream& err,
             const HeatOptions& opt) {
    if (!check_format(opt.format, err)) return kExitUsage;
    if (opt.steps < 0) {
        err << "error: steps must be non-negative\n";
        return kExitUsage;
    }
    AlgebraElement f0(1);
    if (!load_function(in, err, opt.degree, &f0)) return kExitUsage;

    const int n = opt.degree - 1;
    const AlgebraElement fk = heat_solve(f0, opt.steps, n);

    // Iterating is cheap because the walk is stationary after one step:
    // stop as soon as a step changes nothing.
    HeatState state{0, n, f0};
    for (int j = 1; j <= opt.steps; ++j) {
        HeatState next = heat_step(state);
        const bool stable = (next.state == state.state);
        state = std::move(next);
        if (stable) {
            state.k = opt.steps;
            break;
        }
    }
    const bool agree = (state.state == fk);
    err << "agreement closed-form-vs-iteration: " << (agree ? "exact" : "MISMATCH")
        << "\n";

    if (opt.format == "json") {
        json j;
        j["degree"] = opt.degree;
        j["steps"] = opt.steps;
        json values = json::array();
        for (const auto& [s, coef] : fk.coeffs())
            values.push_back({{"permutation", to_string(s)},
                              {"value", format_rational(coef)}});
        j["values"] = values;
        out << j.dump(2) << "\n";
    } else {
        write_function(out, fk);
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_radon(std::istream& in, std::ostream& out, std::ostream& err,
              const RadonOptions& opt) {
    if (!check_format(opt.format, err)) return kExitUsage;

    if (opt.mode == "group") {
        AlgebraElement f(1);
        if (!load_function(in, err, opt.degree, &f)) return kExitUsage;
        const int n = opt.degree - 1;
        const AlgebraElement rf = horocyclic_radon(f, n);

        json values = json::array();
        for (int j = 1; j <= n + 1; ++j) {
            const auto rep = Permutation::transposition(n + 1, j, n + 1);
            const std::string v = format_rational(rf.at(rep));
            if (opt.format == "json")
                values.push_back({{"coset", j}, {"value", v}});
            else
                out << j << " " << v << "\n";
        }
        if (opt.format == "json") {
            json j;
            j["mode"] = "group";
            j["degree"] = opt.degree;
            j["values"] = values;
            out << j.dump(2) << "\n";
        }
        return kExitOk;
    }

    if (opt.mode != "divisor" && opt.mode != "invert") {
        err << "error: mode must be group, divisor or invert\n";
        return kExitUsage;
    }

    ArithmeticFn table;
    try {
        table = read_table(in, opt.truncation);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const int N = table.bound();
    const int M = std::min(opt.out_max, N);
    if (M < 1) {
        err << "error: nothing to emit (out-max below 1)\n";
        return kExitUsage;
    }

    const bool invert = (opt.mode == "invert");
    json values = json::array();
    if (invert && opt.format != "json") out << "# truncation " << N << "\n";
    for (int m = 1; m <= M; ++m) {
        const double v = invert ? mobius_invert(table, m) : coset_radon(table, m);
        if (opt.format == "json")
            values.push_back({{"index", m}, {"value", v}});
        else if (v != 0.0)
            out << m << " " << double_text(v) << "\n";
    }
    if (opt.format == "json") {
        json j;
        j["mode"] = opt.mode;
        j["truncation"] = N;
        j["values"] = values;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_tableaux(std::ostream& out, std::ostream& err, const TableauxOptions& opt) {
    if (!check_format(opt.format, err)) return kExitUsage;
    if (opt.degree < 1 || opt.degree > 6) {
        err << "error: degree must be between 1 and 6\n";
        return kExitUsage;
    }

    json shapes = json::array();
    for (const auto& shape : partitions_of(opt.degree)) {
        const auto t = Tableau::row_major(shape);
        const auto P = row_stabilizer(t);
        const auto Q = column_stabilizer(t);
        const auto e = polytabloid(t);
        const auto standard = standard_fillings(shape);
        const int dim = ideal_dimension(t);
        const Rational lambda = polytabloid_scalar(t);

        if (opt.format == "json") {
            shapes.push_back({{"shape", to_string(shape)},
                              {"row_stabilizer", P.size()},
                              {"column_stabilizer", Q.size()},
                              {"support", e.support_size()},
                              {"standard_fillings", standard.size()},
                              {"dimension", dim},
                              {"scalar", format_rational(lambda)}});
        } else {
            out << to_string(shape) << " rowstab " << P.size() << " colstab "
                << Q.size() << " support " << e.support_size() << " standard "
                << standard.size() << " dimension " << dim << " scalar "
                << format_rational(lambda) << "\n";
        }
    }
    if (opt.format == "json") {
        json j;
        j["degree"] = opt.degree;
        j["shapes"] = shapes;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace sgh
