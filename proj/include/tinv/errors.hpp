#pragma once

#include <stdexcept>
#include <string>

namespace tinv {

// Domain error carrying a stable machine-readable name. The CLI mirrors the
// name into the JSON "error" field, so renaming a subclass is a breaking
// change to the output format.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class AsymmetricMetric final : public Error {
public:
    explicit AsymmetricMetric(const std::string& what) : Error("AsymmetricMetric", what) {}
};

class DegenerateMetric final : public Error {
public:
    explicit DegenerateMetric(const std::string& what) : Error("DegenerateMetric", what) {}
};

class DimensionMismatch final : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

class ConvergenceFailure final : public Error {
public:
    explicit ConvergenceFailure(const std::string& what) : Error("ConvergenceFailure", what) {}
};

class UnsupportedClass final : public Error {
public:
    explicit UnsupportedClass(const std::string& what) : Error("UnsupportedClass", what) {}
};

class AsymmetricBlock final : public Error {
public:
    explicit AsymmetricBlock(const std::string& what) : Error("AsymmetricBlock", what) {}
};

class NotTraceless final : public Error {
public:
    explicit NotTraceless(const std::string& what) : Error("NotTraceless", what) {}
};

class ParseError final : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

class InvalidArgument final : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

} // namespace tinv
