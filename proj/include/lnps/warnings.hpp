#pragma once

#include <string>

namespace lnps {

using WarnHandler = void (*)(const std::string& message);

/// Install a handler for non-fatal diagnostics (degenerate inputs, thin
/// strata). Pass nullptr to restore the default, which writes to stderr.
/// Intended for configuration at startup, not for concurrent mutation.
void set_warn_handler(WarnHandler handler);

/// Emit a warning through the installed handler.
void warn(const std::string& message);

}  // namespace lnps
