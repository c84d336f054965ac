from odds_ratio_mc.cli.main import main

raise SystemExit(main())
