#pragma once

#include "qspin/entanglement.hpp"
#include "qspin/error.hpp"
#include "qspin/linalg.hpp"
#include "qspin/model.hpp"
#include "qspin/pauli.hpp"
#include "qspin/scan.hpp"
