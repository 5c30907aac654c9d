#include "cli/interferogram_file.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "cli/number_format.hpp"

namespace curlicue::cli {

namespace {

constexpr std::string_view kColumnHeader = "lambda_nm,intensity";

std::string join_weights(const std::vector<double>& weights) {
    std::string out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ';';
        out += format_double(weights[i]);
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

double require_double(std::string_view text, std::size_t line, std::string_view key) {
    auto value = parse_double(text);
    if (!value) fail(line, "invalid number for " + std::string(key));
    return *value;
}

int require_int(std::string_view text, std::size_t line, std::string_view key) {
    auto value = parse_int64(text);
    if (!value || *value < std::numeric_limits<int>::min() || *value > std::numeric_limits<int>::max()) {
        fail(line, "invalid integer for " + std::string(key));
    }
    return static_cast<int>(*value);
}

}  // namespace

void write_interferogram(std::ostream& out, const Interferogram& ig) {
    const auto& p = ig.provenance;
    out << kInterferogramMagic << '\n';
    out << "# x_nm=" << format_double(ig.displacement_unit_nm) << '\n';
    out << "# M=" << ig.sum_spec.path_count() << '\n';
    out << "# d=" << ig.sum_spec.order() << '\n';
    out << "# r_nm=" << format_double(p.reference_length_nm) << '\n';
    out << "# seed=" << p.seed << '\n';
    out << "# mirror_sigma_nm=" << format_double(p.mirror_sigma_nm) << '\n';
    out << "# detector_sigma=" << format_double(p.detector_sigma) << '\n';
    if (!p.arm_weights.empty()) out << "# arm_weights=" << join_weights(p.arm_weights) << '\n';
    if (!p.generator.empty()) out << "# generator=" << p.generator << '\n';
    for (const auto& [key, value] : p.extra) out << "# " << key << '=' << value << '\n';
    out << kColumnHeader << '\n';
    for (const auto& s : ig.samples) {
        out << format_double(s.lambda_nm) << ',' << format_double(s.intensity) << '\n';
    }
}

Interferogram read_interferogram(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || trim(line) != kInterferogramMagic) {
        fail(line_no, "missing '" + std::string(kInterferogramMagic) + "' marker");
    }

    Interferogram ig;
    std::optional<double> x;
    std::optional<int> paths;
    std::optional<int> order;
    std::set<std::string> seen;
    bool columns = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (!text.starts_with('#')) {
            if (text != kColumnHeader) fail(line_no, "expected column header '" + std::string(kColumnHeader) + "'");
            columns = true;
            break;
        }
        const std::string_view body = trim(text.substr(1));
        const auto eq = body.find('=');
        if (eq == std::string_view::npos || eq == 0) fail(line_no, "malformed header line");
        const std::string key(trim(body.substr(0, eq)));
        const std::string_view value = trim(body.substr(eq + 1));
        if (!seen.insert(key).second) fail(line_no, "duplicate header key " + key);

        auto& p = ig.provenance;
        if (key == "x_nm") {
            x = require_double(value, line_no, key);
        } else if (key == "M") {
            paths = require_int(value, line_no, key);
        } else if (key == "d") {
            order = require_int(value, line_no, key);
        } else if (key == "r_nm") {
            p.reference_length_nm = require_double(value, line_no, key);
        } else if (key == "seed") {
            auto seed = parse_uint64(value);
            if (!seed) fail(line_no, "invalid seed");
            p.seed = *seed;
        } else if (key == "mirror_sigma_nm") {
            p.mirror_sigma_nm = require_double(value, line_no, key);
        } else if (key == "detector_sigma") {
            p.detector_sigma = require_double(value, line_no, key);
        } else if (key == "arm_weights") {
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto sep = rest.find(';');
                p.arm_weights.push_back(require_double(rest.substr(0, sep), line_no, key));
                if (sep == std::string_view::npos) break;
                rest.remove_prefix(sep + 1);
            }
        } else if (key == "generator") {
            p.generator = std::string(value);
        } else {
            p.extra.emplace_back(key, std::string(value));
        }
    }
    if (!columns) fail(line_no, "missing column header");
    if (!x) throw FormatError("header is missing x_nm");
    if (!paths) throw FormatError("header is missing M");
    if (!order) throw FormatError("header is missing d");

    try {
        ig.sum_spec = SumSpec(*paths, *order);
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
    ig.displacement_unit_nm = *x;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) fail(line_no, "expected 'lambda_nm,intensity'");
        auto lambda = parse_double(text.substr(0, comma));
        auto value = parse_double(text.substr(comma + 1));
        if (!lambda || !value) fail(line_no, "invalid data row");
        ig.samples.push_back({*lambda, *value});
    }

    try {
        ig.validate();
        if (!ig.provenance.arm_weights.empty()) {
            NoiseModel{0.0, ig.provenance.arm_weights, 0.0, 0}.validate(ig.sum_spec.path_count());
        }
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what());
    }
    return ig;
}

void save_interferogram(const std::filesystem::path& path, const Interferogram& ig) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_interferogram(out, ig);
    if (!out) throw Error("failed writing " + path.string());
}

Interferogram load_interferogram(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_interferogram(in);
}

}  // namespace curlicue::cli
