#pragma once
// Three-valued check statuses and the window-horizon policy. Everything in
// the paper quantifies over all of Z; a finite window can falsify but only
// sometimes certify, so certifications require clearance of a top margin.

#include <algorithm>
#include <string>

namespace zalg {

enum class Status { pass, fail, inconclusive };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "inconclusive";
    }
}

inline Status worst(Status a, Status b) {
    if (a == Status::fail || b == Status::fail) return Status::fail;
    if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
    return Status::pass;
}

struct Horizon {
    int lo = 0, hi = 0, margin = 1;

    // default margin: top quarter of the window, at least one object
    static Horizon standard(int lo, int hi) {
        return {lo, hi, std::max(1, (hi - lo + 1) / 4)};
    }
    int top() const { return hi - margin; }
    bool in_margin(int n) const { return n > top(); }
};

} // namespace zalg
