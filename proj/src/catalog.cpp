// catalog implementation pending
