#pragma once

#include <doctest.h>

#include <functional>

#include "cogdist/errors.hpp"

namespace testsupport {

// Runs fn, which must throw a cogdist::Error, and returns its code.
inline cogdist::errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const cogdist::Error& e) {
        return e.code();
    }
    FAIL("expected a cogdist::Error");
    return cogdist::errc::io_error;
}

}  // namespace testsupport
