#include "plab/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace plab {

using nlohmann::json;

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string permutation_to_json(const Permutation& p) {
    json j;
    j["n"] = p.size();
    j["one_line"] = std::vector<int>(p.word().begin(), p.word().end());
    return j.dump();
}

Permutation permutation_from_json(const std::string& text) {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    auto word = j.at("one_line").get<std::vector<int>>();
    if (static_cast<int>(word.size()) != n)
        throw std::invalid_argument("permutation_from_json: one_line length differs from n");
    return Permutation::from_one_line(std::move(word));
}

std::string swap_word_to_json(const SwapWord& w) {
    json j;
    j["n"] = w.n;
    j["positions"] = w.positions;
    return j.dump();
}

SwapWord swap_word_from_json(const std::string& text) {
    const json j = json::parse(text);
    SwapWord w{j.at("n").get<int>(), j.at("positions").get<std::vector<int>>()};
    w.validate();
    return w;
}

void write_trajectory_csv(std::ostream& os, const TrajectoryEnsemble& e) {
    os << "path_id";
    for (double t : e.grid().times()) os << ',' << format_sig12(t);
    os << '\n';
    for (int i = 0; i < e.path_count(); ++i) {
        os << i;
        for (double v : e.path(i)) os << ',' << format_sig12(v);
        os << '\n';
    }
}

void write_permuton_csv(std::ostream& os, const DiscretePermuton& p) {
    os << "x,y\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << format_sig12(p.xs()[i]) << ',' << format_sig12(p.ys()[i]) << '\n';
}

void write_planar_csv(std::ostream& os, const PlanarEnsemble& e) {
    os << "path_id,t,x,y\n";
    const auto ts = e.grid().times();
    for (int i = 0; i < e.path_count(); ++i) {
        const auto xs = e.path_x(i);
        const auto ys = e.path_y(i);
        for (std::size_t j = 0; j < ts.size(); ++j)
            os << i << ',' << format_sig12(ts[j]) << ',' << format_sig12(xs[j]) << ','
               << format_sig12(ys[j]) << '\n';
    }
}

void write_histogram_csv(std::ostream& os, std::span<const long long> counts) {
    os << "position,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i)
        os << (i + 1) << ',' << counts[i] << '\n';
}

std::string energy_report_to_json(const EnergyReport& r) {
    json j;
    j["times"] = std::vector<double>(r.partition.times().begin(), r.partition.times().end());
    j["per_interval"] = r.per_interval;
    j["total"] = r.total;
    return j.dump();
}

std::string deviation_report_to_json(const DeviationReport& r) {
    json j;
    j["n"] = r.n;
    j["sup_deviation"] = r.sup_deviation;
    j["bound"] = r.bound;
    j["hold"] = r.hold;
    j["seed"] = r.seed;
    return j.dump();
}

std::string distance_report_to_json(const DistanceReport& r) {
    if (r.method != "assignment" && r.method != "formula" && r.method != "maxsum")
        throw std::invalid_argument("distance_report_to_json: unknown method tag");
    json j;
    j["method"] = r.method;
    j["n_or_m"] = r.n_or_m;
    j["value"] = r.value;
    if (r.seed) j["seed"] = *r.seed;
    else j["seed"] = nullptr;
    return j.dump();
}

} // namespace plab
