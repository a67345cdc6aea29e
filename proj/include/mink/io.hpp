#pragma once

// Deterministic writers: OBJ meshes, CSV curve samples, verification
// reports. Floats are written as the shortest round-trip decimal and lines
// end with LF, so identical inputs produce identical bytes everywhere.

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mink/errors.hpp"
#include "mink/format.hpp"
#include "mink/surface.hpp"
#include "mink/vec.hpp"

namespace mink {

namespace detail {

inline void check_stream(const std::ostream& out) {
    if (!out) throw IoError("write failed");
}

} // namespace detail

// `v x1 x2 x3` per vertex in row-major order, then one quad face per grid
// cell with 1-based indices (r*nv+c+1, (r+1)*nv+c+1, (r+1)*nv+c+2, r*nv+c+2).
inline void write_obj(const SurfaceMesh& mesh, std::ostream& out) {
    if (mesh.nu < 2 || mesh.nv < 2
        || mesh.vertices.size() != std::size_t(mesh.nu) * mesh.nv)
        throw BadParameter("mesh dimensions are inconsistent");
    for (const MinkVec3& p : mesh.vertices) {
        out << "v " << format_double(p.x1) << ' ' << format_double(p.x2) << ' '
            << format_double(p.x3) << '\n';
        detail::check_stream(out);
    }
    for (int r = 0; r + 1 < mesh.nu; ++r) {
        for (int c = 0; c + 1 < mesh.nv; ++c) {
            const int i = r * mesh.nv + c + 1;
            const int j = (r + 1) * mesh.nv + c + 1;
            const int k = (r + 1) * mesh.nv + c + 2;
            const int l = r * mesh.nv + c + 2;
            out << "f " << i << ' ' << j << ' ' << k << ' ' << l << '\n';
            detail::check_stream(out);
        }
    }
}

struct CsvRow {
    double v = 0.0;
    MinkVec3 point;
    std::vector<double> extra;
};

// Header `v,x1,x2,x3[,...]`, one row per sample.
inline void write_csv(std::span<const CsvRow> rows,
                      std::span<const std::string> extra_names, std::ostream& out) {
    out << "v,x1,x2,x3";
    for (const std::string& name : extra_names) out << ',' << name;
    out << '\n';
    detail::check_stream(out);
    for (const CsvRow& row : rows) {
        out << format_double(row.v) << ',' << format_double(row.point.x1) << ','
            << format_double(row.point.x2) << ',' << format_double(row.point.x3);
        for (double x : row.extra) out << ',' << format_double(x);
        out << '\n';
        detail::check_stream(out);
    }
}

struct VerificationReport {
    struct Entry {
        std::string name;
        double max_residual = 0.0;
        double tolerance = 0.0;
        bool passed = false;
        std::string notes;
    };

    std::vector<Entry> entries;

    // passed is derived, never set by hand
    void add(std::string name, double max_residual, double tolerance,
             std::string notes = "") {
        entries.push_back({std::move(name), max_residual, tolerance,
                           max_residual <= tolerance, std::move(notes)});
    }

    void add_bool(std::string name, bool ok, std::string notes = "") {
        add(std::move(name), ok ? 0.0 : 1.0, 0.0, std::move(notes));
    }

    bool all_passed() const {
        for (const Entry& e : entries)
            if (!e.passed) return false;
        return true;
    }

    void append(const VerificationReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
};

inline void write_report(const VerificationReport& report, std::ostream& out) {
    std::size_t n_pass = 0;
    for (const auto& e : report.entries) {
        out << (e.passed ? "PASS " : "FAIL ") << e.name << " residual="
            << format_double(e.max_residual) << " tol=" << format_double(e.tolerance);
        if (!e.notes.empty()) out << ' ' << e.notes;
        out << '\n';
        detail::check_stream(out);
        if (e.passed) ++n_pass;
    }
    out << n_pass << '/' << report.entries.size() << " checks passed\n";
    detail::check_stream(out);
}

} // namespace mink
