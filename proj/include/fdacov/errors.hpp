#pragma once

#include <stdexcept>
#include <string>

namespace fdacov {

// Exit-code classes used by the CLI: 2 = bad input, 3 = numeric
// degeneracy, 4 = bad configuration.
enum class ErrorClass { Input = 2, Numeric = 3, Config = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& msg)
        : std::runtime_error(msg), cls_(cls), kind_(std::move(kind)) {}
    ErrorClass error_class() const { return cls_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorClass cls_;
    std::string kind_;
};

#define FDACOV_DEFINE_ERROR(NAME, CLASS)                                  \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& msg)                             \
            : Error(ErrorClass::CLASS, #NAME, msg) {}                     \
    }

FDACOV_DEFINE_ERROR(ParseError, Input);
FDACOV_DEFINE_ERROR(RaggedPanel, Input);
FDACOV_DEFINE_ERROR(DomainError, Input);
FDACOV_DEFINE_ERROR(InconsistentZ, Input);
FDACOV_DEFINE_ERROR(DimensionMismatch, Input);
FDACOV_DEFINE_ERROR(InvalidBandwidth, Input);
FDACOV_DEFINE_ERROR(EvaluationOutsideDomain, Input);

FDACOV_DEFINE_ERROR(SingularSystem, Numeric);
FDACOV_DEFINE_ERROR(RankDeficient, Numeric);
FDACOV_DEFINE_ERROR(DegenerateSample, Numeric);
FDACOV_DEFINE_ERROR(DegenerateFunctionals, Numeric);
FDACOV_DEFINE_ERROR(QuadratureError, Numeric);
FDACOV_DEFINE_ERROR(AllSingular, Numeric);

FDACOV_DEFINE_ERROR(ConfigError, Config);

#undef FDACOV_DEFINE_ERROR

} // namespace fdacov
