// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

/** \file tables.hpp
 *
 *  Machine- and human-readable output: per-state records, the CSV / JSON /
 *  pretty renderers, and the two built-in reference tables (t1: bound-state
 *  energies at 12 decimals; t2: first-order magnetic shifts at 8 decimals
 *  with bracketed powers of ten for the small entries).
 */

#ifndef DIRAC2D_TABLES_HPP
#define DIRAC2D_TABLES_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac2d/magnetic.hpp"
#include "dirac2d/quantum_numbers.hpp"
#include "dirac2d/spectrum.hpp"
#include "dirac2d/wavefunctions.hpp"

namespace dirac2d {

enum class OutputFormat { csv, json, pretty };

/// One output row. mu and the shift fields are present for zeeman output
/// and absent for the mu-collapsed level listing.
struct OutputRecord {
    std::string label;
    int n = 1;
    int n_prime = 0;
    HalfInt kappa{1};
    std::optional<HalfInt> mu;
    int l = 0;
    double energy = 0.0;
    std::optional<double> shift_e1;
    std::optional<double> shift_nonrel;
};

namespace fmt_detail {

inline std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string scientific(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

/// Shift magnitude in the table style: 8 decimals for ordinary entries,
/// a 4-decimal mantissa with a bracketed power of ten below 1e-3.
inline std::string shift_magnitude(double v)
{
    const double av = std::abs(v);
    if (av >= 1e-3) {
        return fixed(av, 8);
    }
    const int expo = static_cast<int>(std::floor(std::log10(av)));
    const double mant = av / std::pow(10.0, expo);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f[%d]", mant, expo);
    return buf;
}

/// Signed shift for single-state output, same magnitude style.
inline std::string shift_signed(double v)
{
    return (v < 0.0 ? std::string("-") : std::string("")) + shift_magnitude(v);
}

/// "+-"-style rendering for a mu = +|kappa| table entry: the upper sign
/// belongs to mu = +|kappa|.
inline std::string shift_pm(double v)
{
    return (v >= 0.0 ? std::string("±") : std::string("∓")) +
           shift_magnitude(v);
}

inline std::string nonrel_pm(double v)
{
    if (v == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", std::abs(v));
    return (v > 0.0 ? std::string("±") : std::string("∓")) + buf;
}

/// Pads to a display width of n columns (UTF-8 aware: the sign glyphs are
/// multi-byte but single-column).
inline std::string pad_display(std::string s, std::size_t n)
{
    std::size_t columns = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) {
            ++columns;
        }
    }
    while (columns < n) {
        s += ' ';
        ++columns;
    }
    return s;
}

} // namespace fmt_detail

/// One row per (n, kappa) level with n <= n_max (mu collapsed: the energy is
/// mu-independent), ordered as the t1 reference table: by n, then |kappa|,
/// positive kappa first.
inline std::vector<OutputRecord> level_records(const PhysicalParams& params,
                                               int n_max)
{
    std::vector<OutputRecord> rows;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<QuantumNumbers> shell;
        for (int abs2k = 1; abs2k <= 2 * n - 1; abs2k += 2) {
            for (int sk : {+1, -1}) {
                if (sk < 0 && abs2k == 2 * n - 1) {
                    continue;
                }
                shell.push_back(validate_state(n, HalfInt{sk * abs2k},
                                               HalfInt{abs2k}));
            }
        }
        std::sort(shell.begin(), shell.end(),
                  [](const QuantumNumbers& a, const QuantumNumbers& b) {
                      return std::tuple(a.n, abs(a.kappa).twice, a.kappa.twice < 0) <
                             std::tuple(b.n, abs(b.kappa).twice, b.kappa.twice < 0);
                  });
        for (const auto& qn : shell) {
            OutputRecord rec;
            rec.label = spectroscopic_label(qn);
            rec.n = qn.n;
            rec.n_prime = qn.n_prime;
            rec.kappa = qn.kappa;
            rec.l = qn.l;
            rec.energy = energy(qn, params).E;
            rows.push_back(rec);
        }
    }
    return rows;
}

/// Closed-route dispatcher: the n' = 0 closed form where it applies, the
/// general Appendix form otherwise.
inline FirstOrderShift shift_closed(const QuantumNumbers& qn,
                                    const PhysicalParams& params)
{
    return qn.n_prime == 0 ? shift_closed_n0(qn, params)
                           : shift_closed_general(qn, params);
}

inline OutputRecord zeeman_record(const QuantumNumbers& qn,
                                  const PhysicalParams& params, double shift_e1)
{
    OutputRecord rec;
    rec.label = spectroscopic_label(qn);
    rec.n = qn.n;
    rec.n_prime = qn.n_prime;
    rec.kappa = qn.kappa;
    rec.mu = qn.mu;
    rec.l = qn.l;
    rec.energy = energy(qn, params).E;
    rec.shift_e1 = shift_e1;
    rec.shift_nonrel = shift_nonrel(qn);
    return rec;
}

inline std::string render_records(const std::vector<OutputRecord>& rows,
                                  OutputFormat format)
{
    bool with_shift = false;
    for (const auto& r : rows) {
        with_shift |= r.shift_e1.has_value();
    }

    if (format == OutputFormat::csv) {
        std::string out = with_shift
            ? "label,n,n_prime,kappa,mu,l,energy,shift_e1,shift_nonrel\n"
            : "label,n,n_prime,kappa,l,energy\n";
        for (const auto& r : rows) {
            out += r.label + ',' + std::to_string(r.n) + ',' +
                   std::to_string(r.n_prime) + ',' + to_string(r.kappa) + ',';
            if (with_shift) {
                out += (r.mu ? to_string(*r.mu) : "") + ',';
            }
            out += std::to_string(r.l) + ',' + fmt_detail::fixed(r.energy, 12);
            if (with_shift) {
                out += ',' + (r.shift_e1 ? fmt_detail::scientific(*r.shift_e1) : "");
                out += ',' + (r.shift_nonrel ? fmt_detail::fixed(*r.shift_nonrel, 2)
                                             : "");
            }
            out += '\n';
        }
        return out;
    }

    if (format == OutputFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json obj;
            obj["label"] = r.label;
            obj["n"] = r.n;
            obj["n_prime"] = r.n_prime;
            obj["kappa"] = to_string(r.kappa);
            if (r.mu) {
                obj["mu"] = to_string(*r.mu);
            }
            obj["l"] = r.l;
            obj["energy"] = r.energy;
            if (r.shift_e1) {
                obj["shift_e1"] = *r.shift_e1;
            }
            if (r.shift_nonrel) {
                obj["shift_nonrel"] = *r.shift_nonrel;
            }
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }

    // pretty
    std::string out = with_shift
        ? "  n  n'  kappa   mu  l  state            energy  E1           E1_nonrel\n"
        : "  n  n'  kappa  l  state            energy\n";
    int prev_n = rows.empty() ? 1 : rows.front().n;
    for (const auto& r : rows) {
        if (r.n != prev_n) {
            out += '\n';
            prev_n = r.n;
        }
        char buf[160];
        if (with_shift) {
            std::snprintf(buf, sizeof(buf), "%3d  %2d  %5s  %3s  %1d  %-6s  %16s  %-11s  %s\n",
                          r.n, r.n_prime, to_string(r.kappa).c_str(),
                          r.mu ? to_string(*r.mu).c_str() : "", r.l,
                          r.label.c_str(), fmt_detail::fixed(r.energy, 12).c_str(),
                          fmt_detail::shift_signed(*r.shift_e1).c_str(),
                          fmt_detail::fixed(*r.shift_nonrel, 2).c_str());
        } else {
            std::snprintf(buf, sizeof(buf), "%3d  %2d  %5s  %1d  %-6s  %16s\n",
                          r.n, r.n_prime, to_string(r.kappa).c_str(), r.l,
                          r.label.c_str(), fmt_detail::fixed(r.energy, 12).c_str());
        }
        out += buf;
    }
    return out;
}

/// Reference table t1: quantum numbers, spectroscopic labels and energies
/// of all levels with n = 1, 2, 3 at the default Z and c.
inline std::string render_table_t1()
{
    return render_records(level_records(PhysicalParams{}, 3), OutputFormat::pretty);
}

/// Reference table t2: first-order magnetic shifts of the same levels,
/// grouped by n'; the upper sign refers to mu = +|kappa|.
inline std::string render_table_t2()
{
    const PhysicalParams params;
    std::vector<QuantumNumbers> states;
    for (const auto& qn : enumerate_states(3)) {
        if (qn.mu == abs(qn.kappa)) {
            states.push_back(qn);
        }
    }
    std::sort(states.begin(), states.end(),
              [](const QuantumNumbers& a, const QuantumNumbers& b) {
                  return std::tuple(a.n_prime, a.n, abs(a.kappa).twice,
                                    a.kappa.twice < 0) <
                         std::tuple(b.n_prime, b.n, abs(b.kappa).twice,
                                    b.kappa.twice < 0);
              });

    std::string out = "  n'  kappa  state  E1           E1_nonrel\n";
    int prev_np = 0;
    for (const auto& qn : states) {
        if (qn.n_prime != prev_np) {
            out += '\n';
            prev_np = qn.n_prime;
        }
        const double e1 = shift_closed(qn, params).E1;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%4d  %5s  %-6s %s %s\n", qn.n_prime,
                      to_string(qn.kappa).c_str(),
                      spectroscopic_label(qn).c_str(),
                      fmt_detail::pad_display(fmt_detail::shift_pm(e1), 12).c_str(),
                      fmt_detail::nonrel_pm(shift_nonrel(qn)).c_str());
        out += buf;
    }
    return out;
}

} // namespace dirac2d

#endif
