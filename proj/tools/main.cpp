#include "alpwave/filterbank.hpp"
#include "alpwave/fourier.hpp"
#include "alpwave/io.hpp"
#include "alpwave/transform.hpp"
#include "alpwave/verify.hpp"
#include "alpwave/wavelets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace alpwave;

constexpr int kUsageError = 2;
constexpr int kVerifyError = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool resolve_exact_mode(const std::string& mode, long n) {
    const bool exact = mode.empty() ? n <= 12 : mode == "exact";
    if (exact && n > 30)
        throw UsageError("exact mode supports n <= 30; pass --mode float for larger n");
    return exact;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw UsageError("bad number in list: " + item);
    }
    if (out.empty()) throw UsageError("empty value list");
    return out;
}

int cmd_coeffs(long n, long i, const std::string& mode, const std::string& format) {
    const bool exact = resolve_exact_mode(mode, n);
    std::vector<long> is;
    if (i >= 0) {
        if (i > n || (i > 0 && i % 2 == 0))
            throw UsageError("--i must be 0 or an odd integer <= n");
        is.push_back(i);
    } else {
        is.push_back(0);
        for (long k = 1; k <= n; k += 2) is.push_back(k);
    }
    const auto fmt = [exact](const ExactScalar& v) {
        return exact ? to_string(v) : format_double(v.to_double());
    };
    if (format == "json") {
        nlohmann::json doc;
        doc["n"] = n;
        nlohmann::json tables;
        for (long ii : is) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : wavelet_coefficients(n, ii)) row.push_back(fmt(v));
            tables[std::to_string(ii)] = std::move(row);
        }
        doc["tables"] = std::move(tables);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "i,k,value\n";
        for (long ii : is) {
            const auto d = wavelet_coefficients(n, ii);
            for (std::size_t k = 0; k < d.size(); ++k)
                std::cout << ii << "," << k << "," << fmt(d[k]) << "\n";
        }
    }
    return 0;
}

int cmd_matrix(long n, const std::string& which, const std::string& method,
               const std::string& mode, const std::string& format) {
    const bool exact = resolve_exact_mode(mode, n);
    D1Method dm = D1Method::closed;
    if (method == "alternate")
        dm = D1Method::alternate;
    else if (method == "recurrence")
        dm = D1Method::recurrence;
    else if (method == "integral")
        dm = D1Method::integral;
    else if (method != "closed")
        throw UsageError("--method must be closed|alternate|recurrence|integral");

    const FilterMatrices fm = d1_matrix(n, dm);
    const Matrix<ExactScalar>* m = nullptr;
    if (which == "c1")
        m = &fm.refinement.c_plus1;
    else if (which == "cm1")
        m = &fm.refinement.c_minus1;
    else if (which == "d1")
        m = &fm.d_plus1;
    else if (which == "dm1")
        m = &fm.d_minus1;
    else
        throw UsageError("--which must be c1|cm1|d1|dm1");

    if (!exact) {
        for (std::size_t r = 0; r < m->rows(); ++r) {
            std::cout << "[";
            for (std::size_t c = 0; c < m->cols(); ++c)
                std::cout << (c ? ", " : "") << format_double(m->at(r, c).to_double());
            std::cout << "]\n";
        }
    } else if (format == "json") {
        std::cout << matrix_to_json(*m);
    } else {
        std::cout << matrix_to_csv(*m);
    }
    return 0;
}

int cmd_eval(long n, long index, const std::string& points, bool psi) {
    if (index < 0 || index > n) throw UsageError("--index must satisfy 0 <= index <= n");
    const PiecewisePoly h = wavelet_polynomial(n, index);
    bool first = true;
    for (double t : parse_double_list(points)) {
        const double v = psi ? h.eval_double(2 * t - 1) : h.eval_double(t);
        std::cout << (first ? "" : ", ") << format_double(v);
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_fourier(long n, long index, const std::string& thetas, double tol, bool psi) {
    if (index < 0 || index > n) throw UsageError("--index must satisfy 0 <= index <= n");
    for (double th : parse_double_list(thetas)) {
        const std::complex<double> v =
            psi ? psi_hat(n, index, th, tol) : h_hat(n, index, th, tol);
        std::cout << format_double(th) << "," << format_double(v.real()) << ","
                  << format_double(v.imag()) << "\n";
    }
    return 0;
}

int cmd_transform(const std::string& input, long n, long levels, bool inverse, double threshold,
                  const std::string& output) {
    if (n < 0 || levels < 0) throw UsageError("--n and --levels must be nonnegative");
    std::ifstream in(input);
    if (!in) throw UsageError("cannot open input file: " + input);
    std::ofstream out(output);
    if (!out) throw UsageError("cannot open output file: " + output);

    if (inverse) {
        Coeffs exact;
        CoeffsF approx;
        if (read_coeffs(in, n, levels, exact, approx))
            write_signal(out, synthesize(exact));
        else
            write_signal(out, synthesize(approx));
        return 0;
    }

    Signal exact;
    SignalF approx;
    CompressStats stats;
    if (read_signal(in, n, levels, exact, approx)) {
        Coeffs co = analyze(exact);
        if (threshold > 0) co = compress(std::move(co), threshold, stats);
        write_coeffs(out, co);
    } else {
        CoeffsF co = analyze(approx);
        if (threshold > 0) co = compress(std::move(co), threshold, stats);
        write_coeffs(out, co);
    }
    if (threshold > 0)
        std::cerr << "kept " << stats.kept << ", dropped " << stats.dropped
                  << ", error^2 = " << format_double(stats.error2) << "\n";
    return 0;
}

int cmd_verify(long n_max, const std::string& module) {
    if (n_max < 0) throw UsageError("--n-max must be nonnegative");
    const auto reports = verify_all(n_max, module);
    bool all = true;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << rep.title << ": " << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
            all = all && c.pass;
        }
    return all ? 0 : kVerifyError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthonormal Alpert multiwavelet toolkit"};
    app.require_subcommand(1);

    long n = 0, i = -1, index = 0, levels = 0, n_max = 0;
    std::string mode, format = "csv", which, method = "closed", points, thetas, input, output,
                module;
    double tol = 1e-14, threshold = 0;
    bool inverse = false, psi = false;

    auto* coeffs = app.add_subcommand("coeffs", "Print wavelet coefficient tables d^i_{n,k}");
    coeffs->add_option("--n", n)->required();
    coeffs->add_option("--i", i);
    coeffs->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    coeffs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* matrix = app.add_subcommand("matrix", "Print refinement or wavelet filter matrices");
    matrix->add_option("--n", n)->required();
    matrix->add_option("--which", which)->required();
    matrix->add_option("--method", method);
    matrix->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    matrix->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* eval = app.add_subcommand("eval", "Evaluate a wavelet at given points");
    eval->add_option("--n", n)->required();
    eval->add_option("--index", index)->required();
    eval->add_option("--points", points)->required();
    eval->add_flag("--psi", psi, "evaluate the [0,1) rescaled wavelet");

    auto* fourier = app.add_subcommand("fourier", "Evaluate wavelet Fourier transforms");
    fourier->add_option("--n", n)->required();
    fourier->add_option("--index", index)->required();
    fourier->add_option("--theta", thetas)->required();
    fourier->add_option("--tol", tol);
    fourier->add_flag("--psi", psi, "transform of the [0,1) rescaled wavelet");

    auto* transform = app.add_subcommand("transform", "Multiresolution analysis of a CSV signal");
    transform->add_option("--input", input)->required();
    transform->add_option("--n", n)->required();
    transform->add_option("--levels", levels)->required();
    transform->add_flag("--inverse", inverse);
    transform->add_option("--threshold", threshold);
    transform->add_option("--output", output)->required();

    auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
    verify->add_option("--n-max", n_max)->required();
    verify->add_option("--module", module);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*coeffs) return cmd_coeffs(n, i, mode, format);
        if (*matrix) return cmd_matrix(n, which, method, mode, format);
        if (*eval) return cmd_eval(n, index, points, psi);
        if (*fourier) return cmd_fourier(n, index, thetas, tol, psi);
        if (*transform) return cmd_transform(input, n, levels, inverse, threshold, output);
        if (*verify) return cmd_verify(n_max, module);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
