#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqcalc {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero"), index_(-1) {}
    explicit division_by_zero(std::int64_t index)
        : error("division by zero at index " + std::to_string(index)), index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

class missing_pre_term : public error {
public:
    missing_pre_term() : error("sequence has no designated term at index -1") {}
};

class unsupported_radical : public error {
public:
    explicit unsupported_radical(const std::string& what)
        : error("unsupported radical: " + what) {}
};

class not_real : public error {
public:
    explicit not_real(const std::string& what) : error("value is not real: " + what) {}
};

class degenerate_parameter : public error {
public:
    explicit degenerate_parameter(const std::string& what)
        : error("degenerate parameter: " + what) {}
};

class bad_support_bound : public error {
public:
    bad_support_bound(std::int64_t index, std::int64_t k)
        : error("support bound violated at index " + std::to_string(index) +
                ": term " + std::to_string(k) + " is nonzero"),
          index_(index), k_(k) {}
    std::int64_t index() const { return index_; }
    std::int64_t term_index() const { return k_; }

private:
    std::int64_t index_;
    std::int64_t k_;
};

class not_integral : public error {
public:
    explicit not_integral(std::int64_t index)
        : error("non-integer term at index " + std::to_string(index)), index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

class no_convergence_certificate : public error {
public:
    explicit no_convergence_certificate(const std::string& what)
        : error("no convergence certificate: " + what) {}
};

class outside_borel_region : public error {
public:
    explicit outside_borel_region(const std::string& what)
        : error("outside Borel region: " + what) {}
};

class internal_consistency_error : public error {
public:
    explicit internal_consistency_error(const std::string& what)
        : error("internal consistency failure: " + what) {}
};

class unknown_key : public error {
public:
    explicit unknown_key(const std::string& key) : error("unknown key: " + key) {}
};

} // namespace seqcalc
