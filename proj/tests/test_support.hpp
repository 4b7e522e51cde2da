/// @file test_support.hpp
/// @brief Minimal always-on check macros shared by the test binaries.
///
/// No framework: each test file is a plain main().  Failed checks print
/// file, line and the offending expression (with values where available)
/// and make the binary exit nonzero; execution continues so one run
/// reports every failure.

#pragma once

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

namespace testkit {

inline int checks = 0;
inline int failures = 0;
inline std::string section = "";

inline void begin_section(const std::string& name) {
  section = name;
  std::cout << "-- " << name << "\n";
}

inline void fail(const char* file, int line, const std::string& what) {
  ++failures;
  std::cout << "[FAIL] " << file << ":" << line;
  if (!section.empty()) std::cout << " (" << section << ")";
  std::cout << " " << what << "\n";
}

inline int summary(const std::string& binary) {
  if (failures == 0) {
    std::cout << binary << ": " << checks << " checks passed\n";
    return 0;
  }
  std::cout << binary << ": " << failures << " of " << checks
            << " checks FAILED\n";
  return 1;
}

template <typename T>
concept Streamable = requires(std::ostream& os, const T& v) { os << v; };

template <typename T>
std::string show(const T& v) {
  if constexpr (Streamable<T>) {
    std::ostringstream os;
    os << v;
    return os.str();
  } else {
    return "<value>";
  }
}

}  // namespace testkit

#define SECTION(name) testkit::begin_section(name)

#define CHECK(cond)                                         \
  do {                                                      \
    ++testkit::checks;                                      \
    if (!(cond)) testkit::fail(__FILE__, __LINE__, #cond);  \
  } while (0)

#define CHECK_EQ(a, b)                                                       \
  do {                                                                       \
    ++testkit::checks;                                                       \
    auto va_ = (a);                                                          \
    auto vb_ = (b);                                                          \
    if (!(va_ == vb_))                                                       \
      testkit::fail(__FILE__, __LINE__,                                      \
                    std::string(#a " == " #b "  [") + testkit::show(va_) +   \
                        " vs " + testkit::show(vb_) + "]");                  \
  } while (0)

#define CHECK_NEAR(a, b, tol)                                                \
  do {                                                                       \
    ++testkit::checks;                                                       \
    double na_ = static_cast<double>(a);                                     \
    double nb_ = static_cast<double>(b);                                     \
    if (!(std::abs(na_ - nb_) <= (tol)))                                     \
      testkit::fail(__FILE__, __LINE__,                                      \
                    std::string("|" #a " - " #b "| <= " #tol "  [") +        \
                        testkit::show(na_) + " vs " + testkit::show(nb_) +   \
                        "]");                                                \
  } while (0)

#define CHECK_THROWS(expr, Exception)                                        \
  do {                                                                       \
    ++testkit::checks;                                                       \
    bool caught_ = false;                                                    \
    try {                                                                    \
      (void)(expr);                                                          \
    } catch (const Exception&) {                                             \
      caught_ = true;                                                        \
    } catch (...) {                                                          \
    }                                                                        \
    if (!caught_)                                                            \
      testkit::fail(__FILE__, __LINE__,                                      \
                    #expr " did not throw " #Exception);                     \
  } while (0)
