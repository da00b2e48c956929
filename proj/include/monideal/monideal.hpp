#pragma once

#include "monideal/error.hpp"
#include "monideal/exponent.hpp"
#include "monideal/ideal.hpp"
#include "monideal/rational.hpp"
#include "monideal/simplex.hpp"
#include "monideal/newton.hpp"
#include "monideal/transform.hpp"
#include "monideal/factor.hpp"
