#include "layered/errors.hpp"

#include <utility>

namespace layered {

InversionError::InversionError(std::string stage, const std::string& message)
    : Error(stage + ": " + message), stage_(std::move(stage)) {}

}  // namespace layered
