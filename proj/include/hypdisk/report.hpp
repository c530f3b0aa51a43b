#pragma once

#include <cmath>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "hypdisk/envelope.hpp"
#include "hypdisk/format.hpp"
#include "hypdisk/oracle.hpp"

namespace hypdisk {

// Field order is part of the output contract: name, r, computed, expected,
// abs_err, tolerance, pass.
inline void write_reports_json(const std::vector<CheckReport>& reports,
                               std::ostream& os) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const CheckReport& rep : reports) {
        nlohmann::ordered_json row;
        row["name"] = rep.name;
        row["r"] = rep.r;
        row["computed"] = rep.computed;
        row["expected"] = rep.expected;
        row["abs_err"] = rep.abs_err;
        row["tolerance"] = rep.tolerance;
        row["pass"] = rep.pass;
        doc.push_back(std::move(row));
    }
    os << doc.dump(2) << "\n";
}

inline void write_reports_csv(const std::vector<CheckReport>& reports,
                              std::ostream& os) {
    os << "name,r,computed,expected,abs_err,tolerance,pass\n";
    for (const CheckReport& rep : reports) {
        os << rep.name << "," << format_double(rep.r) << ","
           << format_double(rep.computed) << "," << format_double(rep.expected)
           << "," << format_double(rep.abs_err) << ","
           << format_double(rep.tolerance) << ","
           << (rep.pass ? "true" : "false") << "\n";
    }
}

// Envelope constants tabulated against r, 15 significant digits per value.
inline void write_table(double r_min, double r_max, int steps,
                        std::ostream& os) {
    if (!(r_min > 0.0 && r_min <= r_max && r_max < 1.0))
        throw std::domain_error("write_table: need 0 < r_min <= r_max < 1");
    if (steps < 1) throw std::domain_error("write_table: steps must be >= 1");

    os << "r,center_im,radius,beta_rad,tan_beta,arc_length,area\n";
    for (int i = 0; i < steps; ++i) {
        const double r =
            steps == 1 ? r_min
                       : r_min + (r_max - r_min) * static_cast<double>(i) /
                                     static_cast<double>(steps - 1);
        const EnvelopeSpec env(r);
        os << format_double(r, 15) << ","
           << format_double(env.circle_upper.center.imag(), 15) << ","
           << format_double(env.circle_upper.radius, 15) << ","
           << format_double(env.beta, 15) << ","
           << format_double(2.0 * r / (1.0 - r * r), 15) << ","
           << format_double(boundary_arc_length(r), 15) << ","
           << format_double(union_area(r), 15) << "\n";
    }
}

}  // namespace hypdisk
