#include "lnps/warnings.hpp"

#include <cstdio>

namespace lnps {

namespace {

void default_handler(const std::string& message) {
  std::fprintf(stderr, "warning: %s\n", message.c_str());
}

WarnHandler g_handler = &default_handler;

}  // namespace

void set_warn_handler(WarnHandler handler) {
  g_handler = handler ? handler : &default_handler;
}

void warn(const std::string& message) { g_handler(message); }

}  // namespace lnps
