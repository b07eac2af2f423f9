#pragma once
// Machine-readable reports: one entry per check with a three-valued verdict
// and a witness payload. Serialization uses a stable key order and contains
// no wall-clock data by default, so identical inputs yield byte-identical
// output; timings are attached only on request.

#include "zalg/status.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zalg {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    Status status = Status::pass;
    Json witness = Json::object();
    std::string note;
};

struct Report {
    std::string command;
    std::string input_name;
    std::string input_digest;
    std::string field;
    int window_lo = 0, window_hi = 0;
    std::uint64_t seed = 12345;
    std::vector<Check> checks;
    Json extra = Json::object(); // command-specific payload (dims tables etc.)

    void add(std::string name, Status st, std::string note = "", Json witness = Json::object()) {
        checks.push_back({std::move(name), st, std::move(witness), std::move(note)});
    }

    int exit_code() const {
        bool fail = false, inconclusive = false;
        for (const auto& c : checks) {
            if (c.status == Status::fail) fail = true;
            if (c.status == Status::inconclusive) inconclusive = true;
        }
        return fail ? 1 : (inconclusive ? 2 : 0);
    }

    Json to_json() const {
        Json j;
        j["schema"] = "zalg-report/1";
        j["command"] = command;
        j["input"] = Json{{"name", input_name},
                          {"digest", "fnv1a64:" + input_digest},
                          {"field", field},
                          {"window", Json::array({window_lo, window_hi})}};
        j["seed"] = seed;
        Json cs = Json::array();
        std::size_t np = 0, nf = 0, ni = 0;
        for (const auto& c : checks) {
            Json e;
            e["name"] = c.name;
            e["status"] = status_str(c.status);
            if (!c.note.empty()) e["note"] = c.note;
            if (!c.witness.empty()) e["witness"] = c.witness;
            cs.push_back(std::move(e));
            if (c.status == Status::pass) ++np;
            else if (c.status == Status::fail) ++nf;
            else ++ni;
        }
        j["checks"] = std::move(cs);
        if (!extra.empty()) j["data"] = extra;
        j["summary"] = Json{{"pass", np}, {"fail", nf}, {"inconclusive", ni}};
        j["exit_code"] = exit_code();
        return j;
    }

    std::string human() const {
        std::string out;
        out += "== " + command + " on " + input_name + " [" + field + ", window " +
               std::to_string(window_lo) + ".." + std::to_string(window_hi) + "] ==\n";
        for (const auto& c : checks) {
            out += "  [";
            out += status_str(c.status);
            out += "] " + c.name;
            if (!c.note.empty()) out += " -- " + c.note;
            if (!c.witness.empty()) out += " " + c.witness.dump();
            out += "\n";
        }
        out += "exit code " + std::to_string(exit_code()) + "\n";
        return out;
    }
};

} // namespace zalg
