#include "file_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "layered/errors.hpp"

namespace layered::cli {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const std::string& field) {
    const auto it = doc.find(field);
    if (it == doc.end()) {
        throw ValidationError("medium file: missing field \"" + field + "\"");
    }
    if (!it->is_array()) {
        throw ValidationError("medium file: field \"" + field + "\" must be an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& v = (*it)[i];
        if (!v.is_number()) {
            throw ValidationError("medium file: " + field + "[" + std::to_string(i) + "] is not a number");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

double number_field(const json& doc, const std::string& field, const std::string& where) {
    const auto it = doc.find(field);
    if (it == doc.end() || !it->is_number()) {
        throw ValidationError("medium file: " + where + " needs a numeric \"" + field + "\"");
    }
    return it->get<double>();
}

Medium parse_coefficient_shape(const json& doc) {
    auto tau = number_array(doc, "tau");
    auto reflection = number_array(doc, "R");
    std::optional<double> tau_last;
    if (const auto it = doc.find("tau_last"); it != doc.end() && !it->is_null()) {
        if (!it->is_number()) {
            throw ValidationError("medium file: field \"tau_last\" must be a number");
        }
        tau_last = it->get<double>();
    }
    return make_medium(std::move(tau), std::move(reflection), tau_last);
}

Medium parse_physical_shape(const json& doc) {
    const auto it = doc.find("layers");
    if (!it->is_array()) {
        throw ValidationError("medium file: field \"layers\" must be an array");
    }
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& entry = (*it)[i];
        const std::string where = "layers[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            throw ValidationError("medium file: " + where + " must be an object");
        }
        layers.push_back({number_field(entry, "density", where), number_field(entry, "bulk_modulus", where)});
    }
    const auto depths = number_array(doc, "depths");
    const auto references = number_array(doc, "references");
    if (references.size() != 2) {
        throw ValidationError("medium file: field \"references\" must hold [z_top, z_bottom]");
    }
    return physical_to_medium(layers, depths, references[0], references[1]);
}

}  // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

Medium parse_medium(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("medium file: not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) {
        throw ValidationError("medium file: top level must be an object");
    }
    const bool coefficients = doc.contains("tau") || doc.contains("R");
    const bool physical = doc.contains("layers");
    if (coefficients == physical) {
        throw ValidationError("medium file: give exactly one of {\"tau\", \"R\"} or {\"layers\", \"depths\", \"references\"}");
    }
    return coefficients ? parse_coefficient_shape(doc) : parse_physical_shape(doc);
}

Medium read_medium_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open medium file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_medium(buffer.str());
}

std::string medium_to_json(const Medium& medium) {
    auto list = [](const std::vector<double>& values) {
        std::string out = "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += (i ? ", " : "") + format_double(values[i]);
        }
        return out + "]";
    };
    std::string out = "{\n  \"tau\": " + list(medium.travel_times) + ",\n";
    if (medium.exit_travel_time) {
        out += "  \"tau_last\": " + format_double(*medium.exit_travel_time) + ",\n";
    }
    out += "  \"R\": " + list(medium.reflection) + "\n}\n";
    return out;
}

DeltaTrain parse_train(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("train file: empty (expected header time,amplitude)");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "time,amplitude") {
        throw ValidationError("train file: header must be time,amplitude");
    }
    std::vector<Event> events;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        const std::string where = "train file: line " + std::to_string(row);
        if (comma == std::string::npos) {
            throw ValidationError(where + " needs two comma-separated values");
        }
        Event e;
        try {
            std::size_t used = 0;
            const std::string time_text = line.substr(0, comma);
            const std::string amplitude_text = line.substr(comma + 1);
            e.time = std::stod(time_text, &used);
            if (used != time_text.size()) {
                throw std::invalid_argument("time");
            }
            e.amplitude = std::stod(amplitude_text, &used);
            if (used != amplitude_text.size()) {
                throw std::invalid_argument("amplitude");
            }
        } catch (const std::logic_error&) {
            throw ValidationError(where + " is not numeric");
        }
        if (!std::isfinite(e.time) || !std::isfinite(e.amplitude)) {
            throw ValidationError(where + " holds a non-finite value");
        }
        if (!events.empty() && !(e.time > events.back().time)) {
            throw ValidationError(where + ": time column must be strictly increasing");
        }
        events.push_back(e);
    }
    return DeltaTrain::from_sorted(std::move(events));
}

DeltaTrain read_train_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open train file " + path);
    }
    return parse_train(in);
}

void write_train(std::ostream& out, const DeltaTrain& train) {
    out << "time,amplitude\n";
    for (const auto& e : train) {
        out << format_double(e.time) << ',' << format_double(e.amplitude) << '\n';
    }
}

void write_spectrum(std::ostream& out, const FrequencyResponse& response) {
    out << "omega,re,im,abs\n";
    for (std::size_t i = 0; i < response.values.size(); ++i) {
        const auto& v = response.values[i];
        out << format_double(response.omegas[i]) << ',' << format_double(v.real()) << ',' << format_double(v.imag())
            << ',' << format_double(std::abs(v)) << '\n';
    }
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    out << text;
}

}  // namespace layered::cli
