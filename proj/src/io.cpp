#include "divkit/io.hpp"

#include <fstream>

namespace divkit {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("bad json in " + path.string() + ": " + e.what());
    }
    return j;
}

AtomSpace space_from_json(const nlohmann::json& j) {
    if (!j.contains("space") || !j["space"].is_array())
        throw std::invalid_argument("measure/system file needs a \"space\" array of labels");
    std::vector<std::string> labels;
    for (const auto& l : j["space"]) labels.push_back(l.get<std::string>());
    return AtomSpace(std::move(labels));
}

std::vector<double> doubles_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("file needs a \"") + key + "\" array");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw std::invalid_argument(std::string(key) + ": numbers only");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

SignedMeasure signed_measure_from_json(const nlohmann::json& j) {
    return SignedMeasure(space_from_json(j), doubles_field(j, "weights"));
}

FiniteMeasure finite_measure_from_json(const nlohmann::json& j) {
    return FiniteMeasure(space_from_json(j), doubles_field(j, "weights"));
}

SignedMeasure read_signed_measure(const std::filesystem::path& path) {
    return signed_measure_from_json(load_json(path));
}

FiniteMeasure read_finite_measure(const std::filesystem::path& path) {
    return finite_measure_from_json(load_json(path));
}

nlohmann::ordered_json measure_to_json(const SignedMeasure& m) {
    nlohmann::ordered_json j;
    j["space"] = m.space().labels();
    j["weights"] = m.weights();
    return j;
}

SystemFile system_from_json(const nlohmann::json& j) {
    AtomSpace space = space_from_json(j);
    if (!j.contains("map") || !j["map"].is_array())
        throw std::invalid_argument("system file needs a \"map\" array of 0-based indices");
    std::vector<std::size_t> map;
    for (const auto& v : j["map"]) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::invalid_argument("system map: nonnegative integers only");
        map.push_back(v.get<std::size_t>());
    }
    DynamicalSystem sys(std::move(space), std::move(map));
    TransferOperator op(std::move(sys), doubles_field(j, "weights"));
    SystemFile out{std::move(op), std::nullopt};
    if (j.contains("phi")) {
        out.phi = doubles_field(j, "phi");
        if (out.phi->size() != out.op.size())
            throw std::invalid_argument("system phi: size does not match atom count");
    }
    return out;
}

SystemFile read_system(const std::filesystem::path& path) {
    return system_from_json(load_json(path));
}

nlohmann::ordered_json ext_real_to_json(ExtReal x) {
    if (x.is_pos_inf()) return "inf";
    if (x.is_neg_inf()) return "-inf";
    return x.value();
}

nlohmann::ordered_json decomposition_to_json(const LebesgueDecomposition& d) {
    nlohmann::ordered_json j;
    j["nu_a"] = d.nu_a.weights();
    j["nu_s_plus"] = d.nu_s_plus.weights();
    j["nu_s_minus"] = d.nu_s_minus.weights();
    return j;
}

nlohmann::ordered_json report_to_json(const DivergenceReport& r) {
    nlohmann::ordered_json j;
    j["value"] = ext_real_to_json(r.value);
    j["ac_term"] = ext_real_to_json(r.ac_term);
    j["sing_plus_term"] = ext_real_to_json(r.sing_plus_term);
    j["sing_minus_term"] = ext_real_to_json(r.sing_minus_term);
    j["decomposition"] = decomposition_to_json(r.decomposition);
    return j;
}

nlohmann::ordered_json variational_to_json(const VariationalReport& r) {
    nlohmann::ordered_json j;
    j["lambda"] = ext_real_to_json(r.lambda);
    j["best"] = ext_real_to_json(r.best);
    j["argmax_cycle"] = r.argmax_cycle;
    j["gap"] = r.gap;
    return j;
}

}  // namespace divkit
