"""genmodel builds term models of multi-sorted infinitary theories by meeting dense sets of finite conditions."""
