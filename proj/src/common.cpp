#include <cctype>
#include <sstream>

#include "rsm/agent_set.hpp"
#include "rsm/error.hpp"
#include "rsm/rational.hpp"

namespace rsm {

std::string to_string(AgentSet s, Side members_side) {
    const char prefix = members_side == Side::Firm ? 'f' : 'w';
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int m : s.members()) {
        if (!first) out << ',';
        out << prefix << (m + 1);
        first = false;
    }
    out << '}';
    return out.str();
}

const char* error_category(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::MalformedDocument: return "malformed_document";
        case ErrorKind::UnknownAgent: return "unknown_agent";
        case ErrorKind::BadWeight: return "bad_weight";
        case ErrorKind::WeightSum: return "weight_sum";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::AxiomFailure: return "axiom_failure";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Capacity: return 3;
        case ErrorKind::AxiomFailure: return 4;
        default: return 2;
    }
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::BadWeight, "not a fraction: \"" + std::string(text) + "\"");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::BadWeight, "zero denominator: \"" + std::string(text) + "\"");
    if (text.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rsm
