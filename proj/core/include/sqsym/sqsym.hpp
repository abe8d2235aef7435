#pragma once

// Umbrella header: the whole public API.
#include "sqsym/divergence.hpp"
#include "sqsym/errors.hpp"
#include "sqsym/inference.hpp"
#include "sqsym/models.hpp"
#include "sqsym/table.hpp"
