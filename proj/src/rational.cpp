#include "lexeu/rational.hpp"

#include "lexeu/error.hpp"

#include <cctype>

namespace lexeu {

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view text) {
    std::string digits(text);
    if (!digits.empty() && digits.front() == '+') {
        digits.erase(0, 1);
    }
    return boost::multiprecision::mpz_int(digits);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SpaceMismatch: return "SpaceMismatch";
        case ErrorKind::EmptyEvent: return "EmptyEvent";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::UnknownOutcome: return "UnknownOutcome";
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::ClassMismatch: return "ClassMismatch";
        case ErrorKind::NotSubset: return "NotSubset";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::AtomGranularity: return "AtomGranularity";
        case ErrorKind::MalformedSystem: return "MalformedSystem";
        case ErrorKind::Unrepresentable: return "Unrepresentable";
        case ErrorKind::AxiomPrecheckFailed: return "AxiomPrecheckFailed";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::IncompleteTable: return "IncompleteTable";
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    auto p = parse_integer(num);
    if (slash == std::string_view::npos) {
        return Rational(p);
    }
    auto q = parse_integer(den);
    if (q == 0) {
        throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
    }
    return Rational(p) / Rational(q);
}

std::string format_rational(const Rational& value) {
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace lexeu
