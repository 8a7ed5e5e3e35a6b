"""Game engine: rules, random action generators, setup, budget-metered forward model and turn loop."""
