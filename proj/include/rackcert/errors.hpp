#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace rackcert {

/// Malformed input or a violated precondition supplied by the caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation contradicts an identity that must hold for every
/// verified family (e.g. a consequence lemma fails). Such a failure means the
/// implementation or the input model is wrong, never that the input is merely
/// a non-family. Every construction bumps a process-wide counter.
class DefectError : public std::logic_error {
public:
    explicit DefectError(const std::string& what);
};

/// Number of DefectError objects constructed in this process.
std::uint64_t defect_count() noexcept;

/// Throws DefectError with `what` unless `ok`.
inline void require_identity(bool ok, const std::string& what)
{
    if (!ok)
        throw DefectError(what);
}

/// Outcome of a verifier that reports instead of throwing.
struct Diagnosis {
    bool ok = true;
    std::string message;
    std::size_t checked = 0;

    static Diagnosis pass(std::size_t checked) { return {true, {}, checked}; }
    static Diagnosis fail(std::string message, std::size_t checked = 0)
    {
        return {false, std::move(message), checked};
    }
    explicit operator bool() const noexcept { return ok; }
};

/// A verified value, or the diagnosis explaining why verification failed.
template <class T>
struct Checked {
    std::optional<T> value;
    Diagnosis diagnosis;

    static Checked accept(T v, std::size_t checked = 0)
    {
        return {std::move(v), Diagnosis::pass(checked)};
    }
    static Checked reject(std::string message, std::size_t checked = 0)
    {
        return {std::nullopt, Diagnosis::fail(std::move(message), checked)};
    }

    explicit operator bool() const noexcept { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }

    /// The value, or InputError carrying the diagnosis.
    const T& get() const
    {
        if (!value)
            throw InputError(diagnosis.message);
        return *value;
    }
};

} // namespace rackcert
