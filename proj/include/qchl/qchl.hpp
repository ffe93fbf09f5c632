#pragma once

#include "qchl/error.hpp"
#include "qchl/rational.hpp"
#include "qchl/linalg.hpp"
#include "qchl/grading.hpp"
#include "qchl/space.hpp"
#include "qchl/algebra.hpp"
#include "qchl/report.hpp"
#include "qchl/checks.hpp"
#include "qchl/representations.hpp"
#include "qchl/constructions.hpp"
#include "qchl/cohomology.hpp"
#include "qchl/extensions.hpp"
#include "qchl/faulkner.hpp"
#include "qchl/codec.hpp"
#include "qchl/catalog.hpp"
