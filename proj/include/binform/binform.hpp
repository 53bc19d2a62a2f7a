#ifndef BINFORM_BINFORM_HPP
#define BINFORM_BINFORM_HPP

#include "binform/arith.hpp"
#include "binform/detkit.hpp"
#include "binform/errors.hpp"
#include "binform/formulas.hpp"
#include "binform/forms.hpp"
#include "binform/harness/compute.hpp"
#include "binform/harness/record.hpp"
#include "binform/harness/runner.hpp"
#include "binform/harness/scan.hpp"
#include "binform/harness/suites.hpp"
#include "binform/matrix.hpp"

#endif  // BINFORM_BINFORM_HPP
