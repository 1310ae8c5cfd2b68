#ifndef ORETEL_ERRORS_HPP
#define ORETEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oretel {

struct DivisionNotExact : std::runtime_error {
    explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

struct BadEvaluationPoint : std::runtime_error {
    explicit BadEvaluationPoint(const std::string& what) : std::runtime_error(what) {}
};

struct TableOutOfRange : std::runtime_error {
    explicit TableOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct CoefficientPole : std::runtime_error {
    explicit CoefficientPole(const std::string& what) : std::runtime_error(what) {}
};

struct NotDFinite : std::runtime_error {
    explicit NotDFinite(const std::string& what) : std::runtime_error(what) {}
};

struct CompletionCapExceeded : std::runtime_error {
    explicit CompletionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleCertificates : std::runtime_error {
    explicit IncompatibleCertificates(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeCapExceeded : std::runtime_error {
    explicit DegreeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oretel

#endif
