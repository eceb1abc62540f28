# GInverse project package: settings for the ginverse command and test runner
