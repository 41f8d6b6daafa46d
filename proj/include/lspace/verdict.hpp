#ifndef LSPACE_VERDICT_HPP
#define LSPACE_VERDICT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace lspace {

using Json = nlohmann::ordered_json;

// Outcome of a property check. `certified`/`refuted` carry a checkable
// witness or are flagged `exact` when a finite argument closes the case;
// `inconclusive` always carries the bounds that were exhausted.
struct PropertyVerdict {
    enum class Status { certified, refuted, inconclusive };

    std::string property;
    Status status = Status::inconclusive;
    bool exact = false;
    Json witness = Json::object();
    Json bounds = Json::object();
    std::vector<std::string> notes;

    bool certified() const { return status == Status::certified; }
    bool refuted() const { return status == Status::refuted; }
    int exit_code() const {
        switch (status) {
            case Status::certified: return 0;
            case Status::refuted: return 1;
            default: return 2;
        }
    }
    static const char* status_name(Status s) {
        switch (s) {
            case Status::certified: return "certified";
            case Status::refuted: return "refuted";
            default: return "inconclusive";
        }
    }
    Json to_json() const {
        Json j;
        j["property"] = property;
        j["status"] = status_name(status);
        j["exact"] = exact;
        j["bounds"] = bounds;
        j["witness"] = witness;
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

}  // namespace lspace

#endif
