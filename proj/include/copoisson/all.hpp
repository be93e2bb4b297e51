#pragma once

#include <copoisson/config.hpp>
#include <copoisson/copoisson.hpp>
#include <copoisson/funcspace.hpp>
#include <copoisson/gallery.hpp>
#include <copoisson/integrate.hpp>
#include <copoisson/mellin.hpp>
#include <copoisson/quad.hpp>
#include <copoisson/refinement.hpp>
#include <copoisson/report.hpp>
#include <copoisson/sonine.hpp>
#include <copoisson/special.hpp>
#include <copoisson/sums.hpp>
