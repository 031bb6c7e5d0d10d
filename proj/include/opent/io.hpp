// Copyright 2026 The opent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// File formats and report rendering.
//
// Matrix file (JSON):
//   {"rows": R, "cols": C, "d1": D1, "d2": D2, "data": [[re, im], ...]}
// with data row-major, R*C pairs; d1/d2 optional, and when present d1*d2 == rows.
// Doubles are written in shortest round-trip form, so read(write(M)) == M bit-exactly.
//
// Sweep CSV: header "theta,concurrence_closed,concurrence_numeric", then one row
// per angle, every field in %.11e (12 significant digits).

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "opent/error.hpp"
#include "opent/gates.hpp"
#include "opent/hs_space.hpp"
#include "opent/measures.hpp"
#include "opent/tensor.hpp"

namespace opent {

struct MatrixFile {
    DenseMatrix matrix;
    std::optional<Bipartition> bipartition;
};

inline nlohmann::json to_json(const MatrixFile& file) {
    nlohmann::json j;
    j["rows"] = file.matrix.rows();
    j["cols"] = file.matrix.cols();
    if (file.bipartition) {
        j["d1"] = file.bipartition->d1();
        j["d2"] = file.bipartition->d2();
    }
    auto data = nlohmann::json::array();
    for (const auto& z : file.matrix.data()) data.push_back({z.real(), z.imag()});
    j["data"] = std::move(data);
    return j;
}

inline MatrixFile matrix_file_from_json(const nlohmann::json& j) {
    auto positive = [&](const char* key) -> std::size_t {
        if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0) {
            throw InvalidInputError(std::string("matrix file: '") + key + "' must be a positive integer");
        }
        return static_cast<std::size_t>(j[key].get<long long>());
    };
    if (!j.is_object()) throw InvalidInputError("matrix file: top level must be an object");
    const std::size_t rows = positive("rows");
    const std::size_t cols = positive("cols");
    if (!j.contains("data") || !j["data"].is_array()) throw InvalidInputError("matrix file: 'data' must be an array");
    const auto& data = j["data"];
    if (data.size() != rows * cols) {
        throw InvalidInputError("matrix file: 'data' has " + std::to_string(data.size()) + " entries, expected " +
                                std::to_string(rows * cols));
    }
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const auto& z : data) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            throw InvalidInputError("matrix file: every entry must be a [re, im] pair of numbers");
        }
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    MatrixFile file{DenseMatrix(rows, cols, std::move(entries)), std::nullopt};
    const bool has_d1 = j.contains("d1");
    const bool has_d2 = j.contains("d2");
    if (has_d1 != has_d2) throw InvalidInputError("matrix file: 'd1' and 'd2' must appear together");
    if (has_d1) {
        Bipartition bp(positive("d1"), positive("d2"));
        if (bp.dim() != rows) throw InvalidInputError("matrix file: d1*d2 does not equal rows");
        file.bipartition = bp;
    }
    return file;
}

inline std::string write_matrix_string(const MatrixFile& file) { return to_json(file).dump(); }

inline MatrixFile read_matrix_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError(std::string("matrix file: ") + e.what());
    }
    return matrix_file_from_json(j);
}

inline void write_matrix_file(const std::string& path, const MatrixFile& file) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << write_matrix_string(file) << '\n';
    if (!out) throw IoError("failed writing '" + path + "'");
}

inline MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return read_matrix_string(buf.str());
}

/// make_gate plus custom gates: the bipartition comes from d1/d2 of the spec when
/// nonzero, else from the file.
inline OperatorState resolve_gate(const GateSpec& spec) {
    validate(spec);
    if (const auto* custom = std::get_if<CustomGate>(&spec)) {
        auto file = read_matrix_file(custom->path);
        if (!file.matrix.is_square()) throw InvalidInputError("custom gate: matrix must be square");
        std::optional<Bipartition> bp = file.bipartition;
        if (custom->d1 != 0 || custom->d2 != 0) {
            if (custom->d1 == 0 || custom->d2 == 0) throw InvalidSpecError("custom gate: give both --d1 and --d2");
            bp = Bipartition(custom->d1, custom->d2);
        }
        if (!bp) throw InvalidSpecError("custom gate: bipartition unknown; pass --d1 and --d2");
        if (bp->dim() != file.matrix.rows()) {
            throw InvalidInputError("custom gate: d1*d2 does not match the matrix side " +
                                    std::to_string(file.matrix.rows()));
        }
        return {std::move(file.matrix), *bp};
    }
    return make_gate(spec);
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRow {
    double theta;
    double c_closed;
    double c_numeric;
};

/// `steps` uniform angles in (from, to), endpoints excluded; with
/// include_endpoints the grid is closed and steps >= 2.
inline std::vector<double> sweep_angles(double from, double to, std::size_t steps, bool include_endpoints = false) {
    if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) throw InvalidSpecError("sweep: need from < to");
    if (steps < (include_endpoints ? 2u : 1u)) throw InvalidSpecError("sweep: too few steps");
    std::vector<double> thetas(steps);
    const double span = to - from;
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = include_endpoints ? static_cast<double>(i) / static_cast<double>(steps - 1)
                                           : static_cast<double>(i + 1) / static_cast<double>(steps + 1);
        thetas[i] = from + span * t;
    }
    return thetas;
}

/// Closed form against the two-term concurrence evaluated on the gate's
/// decomposition; the decomposition is checked against the constructed matrix.
inline SweepRow sweep_point(const GateSpec& spec) {
    double theta = 0.0;
    if (const auto* s = std::get_if<SpinGate>(&spec)) {
        theta = s->theta;
    } else if (const auto* z = std::get_if<ZchainGate>(&spec)) {
        theta = z->theta;
    } else {
        throw InvalidSpecError("sweep: gate family '" + gate_name(spec) + "' has no angle parameter");
    }
    const auto gate = make_gate(spec);
    const auto decomposition = two_term_decomposition(spec);
    if (max_abs_diff(decomposition.materialize(), gate.op()) > 1e-12) {
        throw Error("sweep: decomposition does not reproduce the gate at theta = " + std::to_string(theta));
    }
    return {theta, *closed_form_concurrence(spec), concurrence_two_term(decomposition)};
}

inline std::vector<SweepRow> sweep(const GateSpec& base, std::span<const double> thetas) {
    std::vector<SweepRow> rows;
    rows.reserve(thetas.size());
    for (double theta : thetas) {
        GateSpec spec = base;
        if (auto* s = std::get_if<SpinGate>(&spec)) {
            s->theta = theta;
        } else if (auto* z = std::get_if<ZchainGate>(&spec)) {
            z->theta = theta;
        }
        rows.push_back(sweep_point(spec));
    }
    return rows;
}

inline std::string format_sci12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

inline void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "theta,concurrence_closed,concurrence_numeric\n";
    for (const auto& r : rows) {
        out << format_sci12(r.theta) << ',' << format_sci12(r.c_closed) << ',' << format_sci12(r.c_numeric) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Reports

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::json to_json(const MeasureReport& r) {
    auto opt = [](const std::optional<double>& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(); };
    nlohmann::json j;
    j["e"] = r.e;
    j["e_fold4"] = opt(r.e_fold4);
    j["e_tilde"] = opt(r.e_tilde);
    j["ep"] = opt(r.ep);
    j["ep_direct"] = opt(r.ep_direct);
    j["concurrence"] = opt(r.concurrence);
    j["concurrence_two_term"] = opt(r.concurrence_two_term);
    j["schmidt_rank"] = r.schmidt_rank;
    j["schmidt_coefficients"] = r.schmidt_coefficients;
    j["fold4_unavailable"] = r.fold4_unavailable ? nlohmann::json(*r.fold4_unavailable) : nlohmann::json();
    return j;
}

inline void render_report(std::ostream& out, const MeasureReport& r, const Bipartition& bp) {
    auto line = [&](const char* label, const std::optional<double>& v, const char* route) {
        out << label << (v ? format_g17(*v) : std::string("unavailable")) << "  [" << route << "]\n";
    };
    out << "bipartition       " << bp.d1() << " x " << bp.d2() << '\n';
    line("E                 ", r.e, "schmidt spectrum");
    line("E                 ", r.e_fold4, "fold-4 trace");
    line("E~                ", r.e_tilde, "fold-4 trace");
    line("e_p               ", r.ep, "relation E + E~");
    line("e_p               ", r.ep_direct, "fold-4 symmetric projectors");
    out << "schmidt rank      " << r.schmidt_rank << '\n';
    if (r.concurrence) {
        line("C                 ", r.concurrence, "schmidt spectrum, 2 l1 l2");
    } else {
        out << "C                 undefined (rank " << r.schmidt_rank << ")\n";
    }
    if (r.concurrence_two_term) line("C                 ", r.concurrence_two_term, "two-term closed form");
    if (r.fold4_unavailable) out << "note: " << *r.fold4_unavailable << '\n';
}

inline nlohmann::json to_json(const McEstimate& m) {
    return {{"mean", m.mean}, {"std_error", m.std_error}, {"n", m.n}, {"seed", m.seed}};
}

inline void render_mc(std::ostream& out, const McEstimate& m) {
    out << "e_p (monte carlo)  mean " << format_g17(m.mean) << "  std_error " << format_g17(m.std_error) << "  n "
        << m.n << "  seed " << m.seed << '\n';
}

}  // namespace opent
